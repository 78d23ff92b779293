#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "infralog/signature.hpp"
#include "infralog/types.hpp"

namespace infralog {

// A term is a typed constant or variable.
struct Term {
  enum class Kind { Constant, Variable };
  Kind kind = Kind::Variable;
  std::string name;
  Type type;

  static Term constant(std::string name, Type type) {
    return Term{Kind::Constant, std::move(name), std::move(type)};
  }
  static Term variable(std::string name, Type type) {
    return Term{Kind::Variable, std::move(name), std::move(type)};
  }
  bool is_variable() const { return kind == Kind::Variable; }

  friend bool operator==(const Term& a, const Term& b) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula AST. Atoms are generalized equalities q =t r and
// belongings (q0,...,qk) in[t] r; the connectives are !, &, |, -> and the
// typed quantifiers. Factories enforce the formation rules.
class Formula {
 public:
  enum class Kind { EqAtom, InAtom, Not, And, Or, Implies, Exists, Forall };

  static FormulaPtr eq_atom(const Type& type, Term lhs, Term rhs);
  static FormulaPtr in_atom(const Type& bracket_type, std::vector<Term> args, Term rhs);
  static FormulaPtr negation(FormulaPtr body);
  static FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr implication(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr exists(Term var, FormulaPtr body);
  static FormulaPtr forall(Term var, FormulaPtr body);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::EqAtom || kind_ == Kind::InAtom; }

  const Type& atom_type() const { return type_; }       // EqAtom / InAtom
  const std::vector<Term>& terms() const { return terms_; }  // EqAtom: {lhs,rhs}; InAtom: args + rhs
  const Term& in_rhs() const { return terms_.back(); }
  std::size_t in_arity() const { return terms_.size() - 1; }

  const Term& bound_var() const { return var_; }  // Exists / Forall
  const FormulaPtr& lhs() const { return lhs_; }  // also quantifier/negation body
  const FormulaPtr& rhs() const { return rhs_; }
  const FormulaPtr& body() const { return lhs_; }

  // Free variables, computed once at construction.
  const std::set<Term>& free() const { return *free_; }

 private:
  Formula() = default;
  Kind kind_ = Kind::EqAtom;
  Type type_;
  std::vector<Term> terms_;
  Term var_;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
  std::shared_ptr<const std::set<Term>> free_;
};

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Free variables; quantifiers bind.
const std::set<Term>& free_variables(const FormulaPtr& f);
// Every variable occurring anywhere, bound or free.
std::set<Term> all_variables(const FormulaPtr& f);
bool is_closed(const FormulaPtr& f);

// Number of logical symbols !, &, |, ->, E, A in the formula.
int logical_symbol_count(const FormulaPtr& f);

// Rewrites into the fragment built from atoms with !, & and E only:
// atoms are fixed, a|b becomes !(!a & !b), a->b becomes !(a & !b), and
// A x.b becomes !(E x.!b). Idempotent.
FormulaPtr normalize(const FormulaPtr& f);

// Name hygiene used throughout: no quantifier shadows a name already in
// scope, and no bound name also occurs free in the formula. Throws
// TypeError when violated.
void validate_variable_hygiene(const FormulaPtr& f);

// Checks terms against a signature: constants must exist with the recorded
// type, all types must belong to the domain. Throws TypeError.
void validate_against_signature(const FormulaPtr& f, const SignatureSpec& sig);

}  // namespace infralog
