#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace infralog {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a terminal or an enumeration pass would exceed the configured
// cap. Operations fail up front instead of thrashing.
struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, std::uint64_t requested_, std::uint64_t cap_)
      : Error(what + " (requested " + std::to_string(requested_) + ", cap " +
              std::to_string(cap_) + ")"),
        requested(requested_),
        cap(cap_) {}
  std::uint64_t requested = 0;
  std::uint64_t cap = 0;
};

struct TypeError : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t position_)
      : Error(msg + " at offset " + std::to_string(position_)), position(position_) {}
  std::size_t position = 0;
};

struct ValidationError : Error {
  using Error::Error;
};

struct SignatureMismatch : Error {
  using Error::Error;
};

struct ProviderFailure : Error {
  using Error::Error;
};

}  // namespace infralog
