#include "infralog/formula.hpp"

#include <algorithm>

#include "infralog/errors.hpp"

namespace infralog {

namespace {

std::shared_ptr<const std::set<Term>> free_of_terms(const std::vector<Term>& terms) {
  auto out = std::make_shared<std::set<Term>>();
  for (const Term& t : terms)
    if (t.is_variable()) out->insert(t);
  return out;
}

std::shared_ptr<const std::set<Term>> shared_free(const FormulaPtr& f) {
  return std::shared_ptr<const std::set<Term>>(f, &f->free());
}

std::shared_ptr<const std::set<Term>> free_union(const FormulaPtr& a, const FormulaPtr& b) {
  if (b->free().empty()) return shared_free(a);
  if (a->free().empty()) return shared_free(b);
  auto out = std::make_shared<std::set<Term>>(a->free());
  out->insert(b->free().begin(), b->free().end());
  return out;
}

std::shared_ptr<const std::set<Term>> free_minus(const FormulaPtr& body, const Term& var) {
  if (!body->free().count(var)) return shared_free(body);
  auto out = std::make_shared<std::set<Term>>(body->free());
  out->erase(var);
  return out;
}

}  // namespace

FormulaPtr Formula::eq_atom(const Type& type, Term lhs, Term rhs) {
  if (lhs.type != type || rhs.type != type)
    throw TypeError("equality atom at type " + type.to_string() + " applied to terms of types " +
                    lhs.type.to_string() + " and " + rhs.type.to_string());
  if (type.order() > 2) throw TypeError("equality atom above order 2");
  Formula f;
  f.kind_ = Kind::EqAtom;
  f.type_ = type;
  f.terms_ = {std::move(lhs), std::move(rhs)};
  f.free_ = free_of_terms(f.terms_);
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr Formula::in_atom(const Type& bracket_type, std::vector<Term> args, Term rhs) {
  if (!bracket_type.is_bracket())
    throw TypeError("belonging atom needs a bracket type, got " + bracket_type.to_string());
  if (bracket_type.order() > 2) throw TypeError("belonging atom above order 2");
  const auto& parents = bracket_type.parent_types();
  if (args.size() != parents.size())
    throw TypeError("belonging atom at " + bracket_type.to_string() + " expects " +
                    std::to_string(parents.size()) + " arguments, got " + std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].type != parents[i])
      throw TypeError("argument " + std::to_string(i) + " of belonging atom has type " +
                      args[i].type.to_string() + ", expected " + parents[i].to_string());
  }
  if (rhs.type != bracket_type)
    throw TypeError("right side of belonging atom has type " + rhs.type.to_string() + ", expected " +
                    bracket_type.to_string());
  Formula f;
  f.kind_ = Kind::InAtom;
  f.type_ = bracket_type;
  f.terms_ = std::move(args);
  f.terms_.push_back(std::move(rhs));
  f.free_ = free_of_terms(f.terms_);
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr Formula::negation(FormulaPtr body) {
  Formula f;
  f.kind_ = Kind::Not;
  f.lhs_ = std::move(body);
  f.free_ = shared_free(f.lhs_);
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr Formula::conjunction(FormulaPtr lhs, FormulaPtr rhs) {
  Formula f;
  f.kind_ = Kind::And;
  f.lhs_ = std::move(lhs);
  f.rhs_ = std::move(rhs);
  f.free_ = free_union(f.lhs_, f.rhs_);
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr Formula::disjunction(FormulaPtr lhs, FormulaPtr rhs) {
  Formula f;
  f.kind_ = Kind::Or;
  f.lhs_ = std::move(lhs);
  f.rhs_ = std::move(rhs);
  f.free_ = free_union(f.lhs_, f.rhs_);
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr Formula::implication(FormulaPtr lhs, FormulaPtr rhs) {
  Formula f;
  f.kind_ = Kind::Implies;
  f.lhs_ = std::move(lhs);
  f.rhs_ = std::move(rhs);
  f.free_ = free_union(f.lhs_, f.rhs_);
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr Formula::exists(Term var, FormulaPtr body) {
  if (!var.is_variable()) throw TypeError("quantifier must bind a variable");
  Formula f;
  f.kind_ = Kind::Exists;
  f.var_ = std::move(var);
  f.lhs_ = std::move(body);
  f.free_ = free_minus(f.lhs_, f.var_);
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr Formula::forall(Term var, FormulaPtr body) {
  if (!var.is_variable()) throw TypeError("quantifier must bind a variable");
  Formula f;
  f.kind_ = Kind::Forall;
  f.var_ = std::move(var);
  f.lhs_ = std::move(body);
  f.free_ = free_minus(f.lhs_, f.var_);
  return std::make_shared<const Formula>(std::move(f));
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::EqAtom:
    case Formula::Kind::InAtom:
      return a->atom_type() == b->atom_type() && a->terms() == b->terms();
    case Formula::Kind::Not:
      return structurally_equal(a->body(), b->body());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return structurally_equal(a->lhs(), b->lhs()) && structurally_equal(a->rhs(), b->rhs());
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return a->bound_var() == b->bound_var() && structurally_equal(a->body(), b->body());
  }
  return false;
}

namespace {

void collect_all(const FormulaPtr& f, std::set<Term>& out) {
  switch (f->kind()) {
    case Formula::Kind::EqAtom:
    case Formula::Kind::InAtom:
      for (const Term& t : f->terms())
        if (t.is_variable()) out.insert(t);
      return;
    case Formula::Kind::Not:
      collect_all(f->body(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_all(f->lhs(), out);
      collect_all(f->rhs(), out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.insert(f->bound_var());
      collect_all(f->body(), out);
      return;
  }
}

}  // namespace

const std::set<Term>& free_variables(const FormulaPtr& f) { return f->free(); }

std::set<Term> all_variables(const FormulaPtr& f) {
  std::set<Term> out;
  collect_all(f, out);
  return out;
}

bool is_closed(const FormulaPtr& f) { return f->free().empty(); }

int logical_symbol_count(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::EqAtom:
    case Formula::Kind::InAtom:
      return 0;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return 1 + logical_symbol_count(f->body());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return 1 + logical_symbol_count(f->lhs()) + logical_symbol_count(f->rhs());
  }
  return 0;
}

FormulaPtr normalize(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::EqAtom:
    case Formula::Kind::InAtom:
      return f;
    case Formula::Kind::And: {
      FormulaPtr l = normalize(f->lhs());
      FormulaPtr r = normalize(f->rhs());
      if (l == f->lhs() && r == f->rhs()) return f;
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case Formula::Kind::Not: {
      FormulaPtr b = normalize(f->body());
      if (b == f->body()) return f;
      return Formula::negation(std::move(b));
    }
    case Formula::Kind::Exists: {
      FormulaPtr b = normalize(f->body());
      if (b == f->body()) return f;
      return Formula::exists(f->bound_var(), std::move(b));
    }
    case Formula::Kind::Or:
      return Formula::negation(Formula::conjunction(Formula::negation(normalize(f->lhs())),
                                                    Formula::negation(normalize(f->rhs()))));
    case Formula::Kind::Implies:
      return Formula::negation(
          Formula::conjunction(normalize(f->lhs()), Formula::negation(normalize(f->rhs()))));
    case Formula::Kind::Forall:
      return Formula::negation(
          Formula::exists(f->bound_var(), Formula::negation(normalize(f->body()))));
  }
  return f;
}

namespace {

void check_binders(const FormulaPtr& f, std::set<Term>& in_scope) {
  switch (f->kind()) {
    case Formula::Kind::EqAtom:
    case Formula::Kind::InAtom:
      return;
    case Formula::Kind::Not:
      check_binders(f->body(), in_scope);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      check_binders(f->lhs(), in_scope);
      check_binders(f->rhs(), in_scope);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      for (const Term& t : in_scope) {
        if (t.name == f->bound_var().name)
          throw TypeError("quantifier shadows variable '" + t.name + "'");
      }
      in_scope.insert(f->bound_var());
      check_binders(f->body(), in_scope);
      in_scope.erase(f->bound_var());
      return;
    }
  }
}

void collect_binders(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind()) {
    case Formula::Kind::EqAtom:
    case Formula::Kind::InAtom:
      return;
    case Formula::Kind::Not:
      collect_binders(f->body(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_binders(f->lhs(), out);
      collect_binders(f->rhs(), out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.insert(f->bound_var().name);
      collect_binders(f->body(), out);
      return;
  }
}

}  // namespace

void validate_variable_hygiene(const FormulaPtr& f) {
  std::set<Term> scope;
  check_binders(f, scope);
  std::set<std::string> binders;
  collect_binders(f, binders);
  for (const Term& t : free_variables(f)) {
    if (binders.count(t.name))
      throw TypeError("variable '" + t.name + "' occurs both bound and free");
  }
}

void validate_against_signature(const FormulaPtr& f, const SignatureSpec& sig) {
  switch (f->kind()) {
    case Formula::Kind::EqAtom:
    case Formula::Kind::InAtom: {
      if (!sig.types().contains(f->atom_type()))
        throw TypeError("atom type " + f->atom_type().to_string() + " not in the type domain");
      for (const Term& t : f->terms()) {
        if (!sig.types().contains(t.type))
          throw TypeError("term type " + t.type.to_string() + " not in the type domain");
        if (!t.is_variable()) {
          auto ct = sig.constant_type(t.name);
          if (!ct) throw TypeError("unknown constant '" + t.name + "'");
          if (*ct != t.type)
            throw TypeError("constant '" + t.name + "' has type " + ct->to_string() + ", used at " +
                            t.type.to_string());
        }
      }
      return;
    }
    case Formula::Kind::Not:
      validate_against_signature(f->body(), sig);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      validate_against_signature(f->lhs(), sig);
      validate_against_signature(f->rhs(), sig);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      if (!sig.types().contains(f->bound_var().type))
        throw TypeError("quantified type " + f->bound_var().type.to_string() +
                        " not in the type domain");
      validate_against_signature(f->body(), sig);
      return;
  }
}

}  // namespace infralog
