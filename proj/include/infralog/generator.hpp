#pragma once

#include <cstdint>
#include <vector>

#include "infralog/formula.hpp"

namespace infralog {

// Enumerates well-formed formulas over a fixed atom basis, stratified by
// logical symbol count. Binders come from the quantifiable pool, never
// shadow, never collide with a free occurrence in a sibling branch, and
// are non-vacuous (the bound variable occurs free in the body). The
// canonical enumeration is exhaustive per stratum and deterministic; the
// random source is seeded.
class FormulaGen {
 public:
  struct Config {
    std::vector<FormulaPtr> atoms;
    std::vector<Term> quantifiable;
    bool full_connectives = true;  // false: !, & and E only
    std::size_t max_formulas = 2'000'000;
  };

  explicit FormulaGen(Config config);

  // Every formula with at most max_symbols logical symbols.
  std::vector<FormulaPtr> canonical(int max_symbols) const;

  // `count` seeded random formulas with at most max_symbols symbols each.
  std::vector<FormulaPtr> random(std::uint64_t seed, int count, int max_symbols) const;

 private:
  Config config_;
};

}  // namespace infralog
