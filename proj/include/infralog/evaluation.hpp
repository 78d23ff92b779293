#pragma once

#include <map>
#include <optional>

#include "infralog/elem.hpp"
#include "infralog/formula.hpp"

namespace infralog {

// An assignment of terminal elements to typed variables.
class Evaluation {
 public:
  Evaluation() = default;

  void set(const Term& var, Elem value) { values_[var] = std::move(value); }
  Evaluation with(const Term& var, Elem value) const {
    Evaluation copy = *this;
    copy.set(var, std::move(value));
    return copy;
  }

  const Elem* find(const Term& var) const {
    auto it = values_.find(var);
    return it == values_.end() ? nullptr : &it->second;
  }

  const std::map<Term, Elem>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  friend bool operator==(const Evaluation& a, const Evaluation& b) = default;

 private:
  std::map<Term, Elem> values_;
};

}  // namespace infralog
