#include "infralog/generator.hpp"

#include <functional>
#include <map>
#include <random>

#include "infralog/errors.hpp"

namespace infralog {

namespace {

struct Entry {
  FormulaPtr formula;
  std::uint32_t free_mask = 0;    // quantifiable variables occurring free
  std::uint32_t binder_mask = 0;  // quantifiable variables bound somewhere
};

}  // namespace

FormulaGen::FormulaGen(Config config) : config_(std::move(config)) {
  if (config_.atoms.empty()) throw ValidationError("formula generator needs atoms");
  if (config_.quantifiable.size() > 16)
    throw ValidationError("too many quantifiable variables");
}

std::vector<FormulaPtr> FormulaGen::canonical(int max_symbols) const {
  const auto& vars = config_.quantifiable;
  auto var_bit = [&](const Term& v) -> std::uint32_t {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return std::uint32_t{1} << i;
    return 0;
  };

  std::vector<Entry> base;
  for (const FormulaPtr& a : config_.atoms) {
    Entry e;
    e.formula = a;
    for (const Term& v : free_variables(a)) e.free_mask |= var_bit(v);
    base.push_back(e);
  }

  // strata[scope][n] = all entries with exactly n symbols valid under the
  // given in-scope mask.
  std::map<std::uint32_t, std::vector<std::vector<Entry>>> strata;
  std::size_t total = 0;

  std::function<const std::vector<Entry>&(std::uint32_t, int)> enumerate =
      [&](std::uint32_t scope, int n) -> const std::vector<Entry>& {
    auto& rows = strata[scope];
    while (static_cast<int>(rows.size()) <= n) {
      int m = static_cast<int>(rows.size());
      std::vector<Entry> out;
      if (m == 0) {
        out = base;
      } else {
        for (const Entry& e : enumerate(scope, m - 1)) {
          Entry ne = e;
          ne.formula = Formula::negation(e.formula);
          out.push_back(std::move(ne));
        }
        for (int i = 0; i + 1 <= m - 1; ++i) {
          int j = m - 1 - i;
          for (const Entry& l : enumerate(scope, i)) {
            for (const Entry& r : enumerate(scope, j)) {
              if ((l.binder_mask & r.free_mask) || (r.binder_mask & l.free_mask)) continue;
              Entry ne;
              ne.free_mask = l.free_mask | r.free_mask;
              ne.binder_mask = l.binder_mask | r.binder_mask;
              ne.formula = Formula::conjunction(l.formula, r.formula);
              out.push_back(ne);
              if (config_.full_connectives) {
                ne.formula = Formula::disjunction(l.formula, r.formula);
                out.push_back(ne);
                ne.formula = Formula::implication(l.formula, r.formula);
                out.push_back(ne);
              }
            }
          }
        }
        for (std::size_t vi = 0; vi < vars.size(); ++vi) {
          std::uint32_t bit = std::uint32_t{1} << vi;
          if (scope & bit) continue;
          for (const Entry& b : enumerate(scope | bit, m - 1)) {
            if (!(b.free_mask & bit)) continue;  // vacuous binder
            Entry ne;
            ne.free_mask = b.free_mask & ~bit;
            ne.binder_mask = b.binder_mask | bit;
            ne.formula = Formula::exists(vars[vi], b.formula);
            out.push_back(ne);
            if (config_.full_connectives) {
              ne.formula = Formula::forall(vars[vi], b.formula);
              out.push_back(ne);
            }
          }
        }
      }
      total += out.size();
      if (total > config_.max_formulas)
        throw BudgetExceeded("canonical formula enumeration too large", total,
                             config_.max_formulas);
      rows.push_back(std::move(out));
    }
    return rows[static_cast<std::size_t>(n)];
  };

  std::vector<FormulaPtr> out;
  for (int n = 0; n <= max_symbols; ++n)
    for (const Entry& e : enumerate(0, n)) out.push_back(e.formula);
  return out;
}

std::vector<FormulaPtr> FormulaGen::random(std::uint64_t seed, int count, int max_symbols) const {
  std::mt19937_64 rng(seed);
  const auto& vars = config_.quantifiable;

  std::function<FormulaPtr(int, std::vector<Term>&)> gen = [&](int budget,
                                                               std::vector<Term>& scope) {
    if (budget <= 0) return config_.atoms[rng() % config_.atoms.size()];
    switch (rng() % 6) {
      case 0:
        return config_.atoms[rng() % config_.atoms.size()];
      case 1:
        return Formula::negation(gen(budget - 1, scope));
      case 2: {
        int left = budget > 1 ? static_cast<int>(rng() % static_cast<std::uint64_t>(budget - 1)) : 0;
        FormulaPtr l = gen(left, scope);
        FormulaPtr r = gen(budget - 1 - left, scope);
        switch (config_.full_connectives ? rng() % 3 : 0) {
          case 0:
            return Formula::conjunction(l, r);
          case 1:
            return Formula::disjunction(l, r);
          default:
            return Formula::implication(l, r);
        }
      }
      default: {
        if (vars.empty()) return config_.atoms[rng() % config_.atoms.size()];
        const Term& v = vars[rng() % vars.size()];
        bool shadowed = false;
        for (const Term& s : scope)
          if (s.name == v.name) shadowed = true;
        if (shadowed) return config_.atoms[rng() % config_.atoms.size()];
        scope.push_back(v);
        FormulaPtr body = gen(budget - 1, scope);
        scope.pop_back();
        bool universal = config_.full_connectives && (rng() & 1);
        return universal ? Formula::forall(v, body) : Formula::exists(v, body);
      }
    }
  };

  std::vector<FormulaPtr> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard < count * 64) {
    ++guard;
    std::vector<Term> scope;
    FormulaPtr f = gen(max_symbols, scope);
    try {
      validate_variable_hygiene(f);
    } catch (const TypeError&) {
      continue;
    }
    out.push_back(f);
  }
  if (static_cast<int>(out.size()) < count)
    throw ValidationError("random formula generation kept violating hygiene");
  return out;
}

}  // namespace infralog
