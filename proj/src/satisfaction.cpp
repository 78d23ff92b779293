#include "infralog/satisfaction.hpp"

#include <vector>

namespace infralog {

namespace {

class Evaluator {
 public:
  Evaluator(const System& system, const Evaluation& eval, SatMode mode)
      : system_(system), mode_(mode) {
    for (const auto& [var, value] : eval.values()) env_.emplace_back(var, value);
  }

  bool eval(const FormulaPtr& f) {
    switch (f->kind()) {
      case Formula::Kind::EqAtom: {
        const Elem& a = value_of(f->terms()[0]);
        const Elem& b = value_of(f->terms()[1]);
        if (mode_ == SatMode::Standard) return a == b;
        return system_.eq_holds(f->atom_type(), a, b);
      }
      case Formula::Kind::InAtom: {
        Elem p = argument_value(f);
        const Elem& big = value_of(f->in_rhs());
        if (mode_ == SatMode::Standard) return big.contains(p);
        return system_.in_holds(f->atom_type(), p, big);
      }
      case Formula::Kind::Not:
        return !eval(f->body());
      case Formula::Kind::And:
        return eval(f->lhs()) && eval(f->rhs());
      case Formula::Kind::Or:
        return eval(f->lhs()) || eval(f->rhs());
      case Formula::Kind::Implies:
        return !eval(f->lhs()) || eval(f->rhs());
      case Formula::Kind::Exists:
        return quantify(f, /*universal=*/false);
      case Formula::Kind::Forall:
        return quantify(f, /*universal=*/true);
    }
    return false;
  }

 private:
  bool quantify(const FormulaPtr& f, bool universal) {
    const Term& var = f->bound_var();
    // A vacuous binder does not need the iteration; terminals over a
    // nonempty carrier are never empty.
    if (!free_variables(f->body()).count(var)) return eval(f->body());
    const ElemList& domain = system_.terminal_of(Semitype::of_type(var.type));
    env_.emplace_back(var, Elem());
    bool result = universal;
    for (const Elem& v : domain) {
      env_.back().second = v;
      bool sat = eval(f->body());
      if (universal && !sat) {
        result = false;
        break;
      }
      if (!universal && sat) {
        result = true;
        break;
      }
    }
    env_.pop_back();
    return result;
  }

  const Elem& value_of(const Term& term) {
    if (!term.is_variable()) return system_.constant_value(term.name);
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == term) return it->second;
    throw ValidationError("evaluation does not cover variable '" + term.name + ":" +
                          term.type.to_string() + "'");
  }

  Elem argument_value(const FormulaPtr& f) {
    if (f->in_arity() == 1) return value_of(f->terms()[0]);
    std::vector<Elem> parts;
    parts.reserve(f->in_arity());
    for (std::size_t i = 0; i < f->in_arity(); ++i) parts.push_back(value_of(f->terms()[i]));
    return Elem::tuple(std::move(parts));
  }

  const System& system_;
  SatMode mode_;
  std::vector<std::pair<Term, Elem>> env_;
};

}  // namespace

bool satisfies(const System& system, const FormulaPtr& formula, const Evaluation& eval,
               SatMode mode) {
  Evaluator ev(system, eval, mode);
  return ev.eval(formula);
}

}  // namespace infralog
