#pragma once

#include <cstdint>

#include "infralog/errors.hpp"

namespace infralog {

// Enumeration budget. Any materialized terminal (power set, product, ...)
// is capped by max_terminal elements.
struct Budget {
  std::uint64_t max_terminal = std::uint64_t{1} << 20;

  void check_terminal(std::uint64_t requested, const char* what) const {
    if (requested > max_terminal) throw BudgetExceeded(what, requested, max_terminal);
  }
};

}  // namespace infralog
