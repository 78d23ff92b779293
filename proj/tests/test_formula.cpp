#include "doctest.h"

#include <functional>
#include <random>

#include "infralog/axioms.hpp"
#include "infralog/errors.hpp"
#include "infralog/parser.hpp"

using namespace infralog;

namespace {

const Type t0 = Type::first_order();
const Type tset = Type::bracket({t0});
const Type trel = Type::bracket({t0, t0});

SignaturePtr small_sig() {
  static SignaturePtr sig = make_signature(
      {t0, tset, trel}, {{t0, {"c"}}, {tset, {"C"}}, {trel, {"leq"}}});
  return sig;
}

}  // namespace

TEST_CASE("parsing the stock shapes") {
  auto sig = small_sig();

  SUBCASE("reflexivity shape") {
    FormulaPtr f = parse("A x:0 . x =0 x", *sig);
    REQUIRE(f->kind() == Formula::Kind::Forall);
    CHECK(f->bound_var() == Term::variable("x", t0));
    CHECK(f->body()->kind() == Formula::Kind::EqAtom);
    CHECK(f->body()->terms()[0] == Term::variable("x", t0));
  }

  SUBCASE("pair belonging") {
    FormulaPtr f = parse("(x, y) in[0,0] leq", *sig);
    REQUIRE(f->kind() == Formula::Kind::InAtom);
    CHECK(f->atom_type() == trel);
    CHECK(f->in_arity() == 2);
    CHECK(f->in_rhs() == Term::constant("leq", trel));
  }

  SUBCASE("quantified belonging") {
    FormulaPtr f = parse("A x:0 . E y:0 . (x,y) in[0,0] leq", *sig);
    REQUIRE(f->kind() == Formula::Kind::Forall);
    REQUIRE(f->body()->kind() == Formula::Kind::Exists);
    CHECK(f->body()->body()->kind() == Formula::Kind::InAtom);
  }

  SUBCASE("single-argument belonging, with or without parens") {
    FormulaPtr a = parse("x in[0] u", *sig);
    FormulaPtr b = parse("(x) in[0] u", *sig);
    CHECK(structurally_equal(a, b));
  }

  SUBCASE("precedence: ! > & > | > ->, right-associative ->") {
    FormulaPtr f = parse("!x =0 c & x =0 c | x =0 c -> x =0 c -> x =0 c", *sig);
    REQUIRE(f->kind() == Formula::Kind::Implies);
    CHECK(f->rhs()->kind() == Formula::Kind::Implies);
    CHECK(f->lhs()->kind() == Formula::Kind::Or);
    CHECK(f->lhs()->lhs()->kind() == Formula::Kind::And);
    CHECK(f->lhs()->lhs()->lhs()->kind() == Formula::Kind::Not);
  }

  SUBCASE("quantifier scope extends maximally right") {
    FormulaPtr f = parse("A x:0 . x =0 c & x =0 c", *sig);
    CHECK(f->kind() == Formula::Kind::Forall);
    CHECK(f->body()->kind() == Formula::Kind::And);
  }
}

TEST_CASE("parse errors carry positions and reasons") {
  auto sig = small_sig();
  CHECK_THROWS_AS(parse("A x:0 . x =0", *sig), SyntaxError);
  CHECK_THROWS_AS(parse("x =0 y)", *sig), SyntaxError);
  CHECK_THROWS_AS(parse("(x, y) in[0] u", *sig), SyntaxError);
  // Type errors: ill-typed atoms and unknown constants at bad positions.
  CHECK_THROWS_AS(parse("x =0 C", *sig), TypeError);
  CHECK_THROWS_AS(parse("x =0 y & x =[0] y", *sig), TypeError);
  CHECK_THROWS_AS(parse("A x:0 . A x:0 . x =0 x", *sig), SyntaxError);
  CHECK_THROWS_AS(parse("(A x:0 . x =0 x) & x =0 c", *sig), TypeError);
  CHECK_THROWS_AS(parse("A c:0 . c =0 c", *sig), TypeError);
}

TEST_CASE("free variables") {
  auto sig = small_sig();
  CHECK(free_variables(parse("x =0 y", *sig)) ==
        std::set<Term>{Term::variable("x", t0), Term::variable("y", t0)});
  CHECK(free_variables(parse("E x:0 . x =0 y", *sig)) == std::set<Term>{Term::variable("y", t0)});
  CHECK(is_closed(parse("A x:0 . E y:0 . x =0 y", *sig)));
}

TEST_CASE("normalization clauses") {
  auto sig = small_sig();
  FormulaPtr atom = parse("x =0 c", *sig);
  CHECK(normalize(atom) == atom);

  FormulaPtr disj = parse("x =0 c | y =0 c", *sig);
  FormulaPtr expect = Formula::negation(Formula::conjunction(
      Formula::negation(parse("x =0 c", *sig)), Formula::negation(parse("y =0 c", *sig))));
  CHECK(structurally_equal(normalize(disj), expect));

  FormulaPtr onlyall = parse("A x:0 . x =0 c", *sig);
  FormulaPtr expect2 = Formula::negation(Formula::exists(
      Term::variable("x", t0), Formula::negation(parse("x =0 c", *sig))));
  CHECK(structurally_equal(normalize(onlyall), expect2));
}

namespace {

// Bounded random formula source used for the syntactic property tests.
FormulaPtr random_formula(std::mt19937_64& rng, const SignatureSpec& sig, int depth,
                          std::vector<Term> scope) {
  auto pick_term = [&](const Type& t) -> Term {
    std::vector<Term> options;
    for (const Term& v : scope)
      if (v.type == t) options.push_back(v);
    for (const std::string& c : sig.constants_of(t)) options.push_back(Term::constant(c, t));
    if (options.empty()) options.push_back(Term::variable(sig.scheme_variable(t, 17), t));
    return options[rng() % options.size()];
  };
  auto atom = [&]() -> FormulaPtr {
    switch (rng() % 3) {
      case 0:
        return Formula::eq_atom(t0, pick_term(t0), pick_term(t0));
      case 1:
        return Formula::eq_atom(tset, pick_term(tset), pick_term(tset));
      default:
        return Formula::in_atom(trel, {pick_term(t0), pick_term(t0)}, pick_term(trel));
    }
  };
  if (depth == 0) return atom();
  switch (rng() % 7) {
    case 0:
      return atom();
    case 1:
      return Formula::negation(random_formula(rng, sig, depth - 1, scope));
    case 2:
      return Formula::conjunction(random_formula(rng, sig, depth - 1, scope),
                                  random_formula(rng, sig, depth - 1, scope));
    case 3:
      return Formula::disjunction(random_formula(rng, sig, depth - 1, scope),
                                  random_formula(rng, sig, depth - 1, scope));
    case 4:
      return Formula::implication(random_formula(rng, sig, depth - 1, scope),
                                  random_formula(rng, sig, depth - 1, scope));
    default: {
      Type t = rng() % 2 ? t0 : tset;
      Term var = Term::variable("q" + std::to_string(scope.size()), t);
      scope.push_back(var);
      FormulaPtr body = random_formula(rng, sig, depth - 1, scope);
      return rng() % 2 ? Formula::exists(var, body) : Formula::forall(var, body);
    }
  }
}

}  // namespace

TEST_CASE("print/parse round-trip on random formulas") {
  auto sig = small_sig();
  std::mt19937_64 rng(7);
  std::vector<Term> seed_scope = {Term::variable("x", t0), Term::variable("y", t0),
                                  Term::variable("u", tset)};
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = random_formula(rng, *sig, 4, seed_scope);
    CAPTURE(print(f));
    FormulaPtr g = parse(print(f), *sig);
    CHECK(structurally_equal(f, g));
  }
}

TEST_CASE("normalize is idempotent, keeps free variables and types") {
  auto sig = small_sig();
  std::mt19937_64 rng(8);
  std::vector<Term> seed_scope = {Term::variable("x", t0), Term::variable("u", tset)};
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = random_formula(rng, *sig, 4, seed_scope);
    FormulaPtr n = normalize(f);
    CHECK(structurally_equal(normalize(n), n));
    CHECK(free_variables(n) == free_variables(f));
    CHECK_NOTHROW(validate_against_signature(n, *sig));
    // The normal form has no |, -> or A nodes.
    std::function<bool(const FormulaPtr&)> clean = [&](const FormulaPtr& g) {
      switch (g->kind()) {
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Forall:
          return false;
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
          return clean(g->body());
        case Formula::Kind::And:
          return clean(g->lhs()) && clean(g->rhs());
        default:
          return true;
      }
    };
    CHECK(clean(n));
  }
}

TEST_CASE("equality axioms per type") {
  auto sig = small_sig();
  auto axioms = equality_axioms(*sig);
  // Three per type plus one E4 per bracket type.
  CHECK(axioms.size() == 3 * 3 + 2);

  SignaturePtr two = make_signature({t0, tset}, {{t0, {"c"}}});
  CHECK(equality_axioms(*two).size() == 7);

  for (const auto& [name, f] : axioms) {
    CAPTURE(name);
    CHECK(is_closed(f));
    CHECK_NOTHROW(validate_variable_hygiene(f));
    CHECK_NOTHROW(validate_against_signature(f, *sig));
    // Round-trip through the concrete syntax.
    CHECK(structurally_equal(parse(print(f), *sig), f));
  }

  CHECK(structurally_equal(axioms[0].formula, parse("A x:0 . x =0 x", *sig)));
  CHECK(axioms[0].name == "E1:0");
}

TEST_CASE("the Dedekind-style library") {
  auto lib = dedekind_axiom_library();
  auto sig = dedekind_signature();
  // 15 equality instances + 22 field/order/cut axioms + 3 extensionality.
  CHECK(lib.size() == 15 + 22 + 3);
  for (const auto& [name, f] : lib) {
    CAPTURE(name);
    CHECK(is_closed(f));
    CHECK_NOTHROW(validate_variable_hygiene(f));
    CHECK_NOTHROW(validate_against_signature(f, *sig));
    CHECK(structurally_equal(parse(print(f), *sig), f));
  }
  auto find = [&](const std::string& n) {
    for (const auto& nf : lib)
      if (nf.name == n) return nf.formula;
    return FormulaPtr{};
  };
  // A5 is the literal non-degeneracy atom.
  FormulaPtr a5 = find("A5");
  REQUIRE(a5);
  CHECK(structurally_equal(a5, parse("!(one =0 zero)", *sig)));
  FormulaPtr a16 = find("A16");
  REQUIRE(a16);
  CHECK(structurally_equal(a16, parse("A x:0 . (x, x) in[0,0] leq", *sig)));
  CHECK(find("PE1"));
  CHECK(find("A22"));
}
