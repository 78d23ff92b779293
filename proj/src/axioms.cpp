#include "infralog/axioms.hpp"

#include <map>
#include <set>

#include "infralog/parser.hpp"

namespace infralog {

namespace {

// Hands out scheme variable names, skipping names already taken by
// another type's pool within the same formula.
class FreshNames {
 public:
  explicit FreshNames(const SignatureSpec& sig) : sig_(sig) {}

  Term fresh(const Type& t) {
    while (true) {
      std::string name = sig_.scheme_variable(t, next_[t]++);
      if (used_.insert(name).second) return Term::variable(name, t);
    }
  }

 private:
  const SignatureSpec& sig_;
  std::map<Type, std::size_t> next_;
  std::set<std::string> used_;
};

FormulaPtr forall_chain(std::vector<Term> vars, FormulaPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, body);
  return body;
}

FormulaPtr conj_chain(const std::vector<FormulaPtr>& parts) {
  FormulaPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::conjunction(out, parts[i]);
  return out;
}

FormulaPtr e1(const SignatureSpec& sig, const Type& t) {
  FreshNames names(sig);
  Term x = names.fresh(t);
  return Formula::forall(x, Formula::eq_atom(t, x, x));
}

FormulaPtr e2(const SignatureSpec& sig, const Type& t) {
  FreshNames names(sig);
  Term x = names.fresh(t), y = names.fresh(t);
  return forall_chain({x, y}, Formula::implication(Formula::eq_atom(t, x, y),
                                                   Formula::eq_atom(t, y, x)));
}

FormulaPtr e3(const SignatureSpec& sig, const Type& t) {
  FreshNames names(sig);
  Term x = names.fresh(t), y = names.fresh(t), z = names.fresh(t);
  return forall_chain({x, y, z},
                      Formula::implication(Formula::conjunction(Formula::eq_atom(t, x, y),
                                                                Formula::eq_atom(t, y, z)),
                                           Formula::eq_atom(t, x, z)));
}

FormulaPtr e4(const SignatureSpec& sig, const Type& t) {
  FreshNames names(sig);
  const auto& parents = t.parent_types();
  std::vector<Term> xs, ys, quantified;
  for (const Type& p : parents) {
    Term x = names.fresh(p), y = names.fresh(p);
    xs.push_back(x);
    ys.push_back(y);
    quantified.push_back(x);
    quantified.push_back(y);
  }
  Term u = names.fresh(t), v = names.fresh(t);
  quantified.push_back(u);
  quantified.push_back(v);

  std::vector<FormulaPtr> hyp;
  for (std::size_t i = 0; i < parents.size(); ++i)
    hyp.push_back(Formula::eq_atom(parents[i], xs[i], ys[i]));
  hyp.push_back(Formula::eq_atom(t, u, v));

  FormulaPtr in_u = Formula::in_atom(t, xs, u);
  FormulaPtr in_v = Formula::in_atom(t, ys, v);
  FormulaPtr both = Formula::conjunction(Formula::implication(in_u, in_v),
                                         Formula::implication(in_v, in_u));
  return forall_chain(quantified, Formula::implication(conj_chain(hyp), both));
}

}  // namespace

std::vector<NamedFormula> equality_axioms(const SignatureSpec& sig) {
  std::vector<NamedFormula> out;
  for (const Type& t : sig.types().types()) {
    out.push_back({"E1:" + t.to_string(), e1(sig, t)});
    out.push_back({"E2:" + t.to_string(), e2(sig, t)});
    out.push_back({"E3:" + t.to_string(), e3(sig, t)});
  }
  for (const Type& t : sig.types().belonging_subdomain())
    out.push_back({"E4:" + t.to_string(), e4(sig, t)});
  return out;
}

SignaturePtr dedekind_signature() {
  static SignaturePtr sig = [] {
    Type pi = Type::first_order();
    Type kappa = Type::bracket({pi});
    Type rho = Type::bracket({pi, pi});
    Type lambda = Type::bracket({pi, pi, pi});
    std::map<Type, std::vector<std::string>> constants;
    constants[pi] = {"zero", "one"};
    constants[rho] = {"neg", "inv", "leq"};
    constants[lambda] = {"add", "mul"};
    return make_signature({pi, kappa, rho, lambda}, std::move(constants));
  }();
  return sig;
}

namespace {

// The relational axioms. Function applications are unfolded through the
// graph relations neg, inv, add, mul; leq is the order.
const std::pair<const char*, const char*> kDedekindAxioms[] = {
    {"A1",
     "(A x:0 . E y:0 . (x, y) in[0,0] neg) & "
     "(A x:0 . A y:0 . A y1:0 . (x, y) in[0,0] neg & (x, y1) in[0,0] neg -> y =0 y1)"},
    {"A2",
     "(A x:0 . A y:0 . E z:0 . (x, y, z) in[0,0,0] add) & "
     "(A x:0 . A y:0 . A z:0 . A z1:0 . (x, y, z) in[0,0,0] add & (x, y, z1) in[0,0,0] add "
     "-> z =0 z1)"},
    {"A3",
     "(A x:0 . !(x =0 zero) -> (E y:0 . (x, y) in[0,0] inv)) & "
     "(A x:0 . A y:0 . (x, y) in[0,0] inv -> !(x =0 zero)) & "
     "(A x:0 . A y:0 . A y1:0 . (x, y) in[0,0] inv & (x, y1) in[0,0] inv -> y =0 y1)"},
    {"A4",
     "(A x:0 . A y:0 . E z:0 . (x, y, z) in[0,0,0] mul) & "
     "(A x:0 . A y:0 . A z:0 . A z1:0 . (x, y, z) in[0,0,0] mul & (x, y, z1) in[0,0,0] mul "
     "-> z =0 z1)"},
    {"A5", "!(one =0 zero)"},
    {"A6",
     "A x:0 . A y:0 . A z:0 . A u1:0 . A u2:0 . A v1:0 . A v2:0 . "
     "(x, y, u1) in[0,0,0] add & (u1, z, u2) in[0,0,0] add & "
     "(y, z, v1) in[0,0,0] add & (x, v1, v2) in[0,0,0] add -> u2 =0 v2"},
    {"A7",
     "A x:0 . A y:0 . A z:0 . "
     "((x, zero, y) in[0,0,0] add -> y =0 x) & ((zero, x, z) in[0,0,0] add -> z =0 x)"},
    {"A8",
     "A x:0 . A u1:0 . A u2:0 . A v1:0 . A v2:0 . "
     "((x, u1) in[0,0] neg & (x, u1, u2) in[0,0,0] add -> u2 =0 zero) & "
     "((x, v1) in[0,0] neg & (v1, x, v2) in[0,0,0] add -> v2 =0 zero)"},
    {"A9",
     "A x:0 . A y:0 . A u1:0 . A v1:0 . "
     "(x, y, u1) in[0,0,0] add & (y, x, v1) in[0,0,0] add -> u1 =0 v1"},
    {"A10",
     "A x:0 . A y:0 . A z:0 . A u1:0 . A u2:0 . A v1:0 . A v2:0 . A v3:0 . "
     "(y, z, u1) in[0,0,0] add & (x, u1, u2) in[0,0,0] mul & (x, y, v1) in[0,0,0] mul & "
     "(x, z, v2) in[0,0,0] mul & (v1, v2, v3) in[0,0,0] add -> u2 =0 v3"},
    {"A11",
     "A x:0 . A y:0 . A z:0 . A u1:0 . A u2:0 . A v1:0 . A v2:0 . A v3:0 . "
     "(x, y, u1) in[0,0,0] add & (u1, z, u2) in[0,0,0] mul & (x, z, v1) in[0,0,0] mul & "
     "(y, z, v2) in[0,0,0] mul & (v1, v2, v3) in[0,0,0] add -> u2 =0 v3"},
    {"A12",
     "A x:0 . A y:0 . A z:0 . A u1:0 . A u2:0 . A v1:0 . A v2:0 . "
     "(x, y, u1) in[0,0,0] mul & (u1, z, u2) in[0,0,0] mul & "
     "(y, z, v1) in[0,0,0] mul & (x, v1, v2) in[0,0,0] mul -> u2 =0 v2"},
    {"A13",
     "A x:0 . A y:0 . A z:0 . "
     "((x, one, y) in[0,0,0] mul -> y =0 x) & ((one, x, z) in[0,0,0] mul -> z =0 x)"},
    {"A14",
     "A x:0 . A u1:0 . A u2:0 . A v1:0 . A v2:0 . !(x =0 zero) -> "
     "((x, u1) in[0,0] inv & (x, u1, u2) in[0,0,0] mul -> u2 =0 one) & "
     "((x, v1) in[0,0] inv & (v1, x, v2) in[0,0,0] mul -> v2 =0 one)"},
    {"A15",
     "A x:0 . A y:0 . A u1:0 . A v1:0 . "
     "(x, y, u1) in[0,0,0] mul & (y, x, v1) in[0,0,0] mul -> u1 =0 v1"},
    {"A16", "A x:0 . (x, x) in[0,0] leq"},
    {"A17",
     "A x:0 . A y:0 . (x, y) in[0,0] leq & (y, x) in[0,0] leq -> x =0 y"},
    {"A18",
     "A x:0 . A y:0 . A z:0 . (x, y) in[0,0] leq & (y, z) in[0,0] leq -> (x, z) in[0,0] leq"},
    {"A19", "A x:0 . A y:0 . (x, y) in[0,0] leq | (y, x) in[0,0] leq"},
    {"A20",
     "A x:0 . A y:0 . A z:0 . A u1:0 . A v1:0 . (x, y) in[0,0] leq -> "
     "((x, z, u1) in[0,0,0] add & (y, z, v1) in[0,0,0] add -> (u1, v1) in[0,0] leq)"},
    {"A21",
     "A x:0 . A y:0 . A u1:0 . (zero, x) in[0,0] leq & (zero, y) in[0,0] leq -> "
     "((x, y, u1) in[0,0,0] mul -> (zero, u1) in[0,0] leq)"},
    {"A22",
     "A u:[0] . A v:[0] . "
     "(E x:0 . x in[0] u) & (E y:0 . y in[0] v) & "
     "(A z:0 . z in[0] u | z in[0] v) & "
     "(A x1:0 . A y1:0 . x1 in[0] u & y1 in[0] v -> (x1, y1) in[0,0] leq) -> "
     "(E z1:0 . A x2:0 . A y2:0 . x2 in[0] u & y2 in[0] v -> "
     "(x2, z1) in[0,0] leq & (z1, y2) in[0,0] leq)"},
    {"PE1",
     "(A u:[0] . A v:[0] . u =[0] v -> "
     "(A x:0 . (x in[0] u -> x in[0] v) & (x in[0] v -> x in[0] u))) & "
     "(A u1:[0] . A v1:[0] . "
     "(A y:0 . (y in[0] u1 -> y in[0] v1) & (y in[0] v1 -> y in[0] u1)) -> u1 =[0] v1)"},
    {"PE2",
     "(A r:[0,0] . A s:[0,0] . r =[0,0] s -> "
     "(A x:0 . A y:0 . ((x, y) in[0,0] r -> (x, y) in[0,0] s) & "
     "((x, y) in[0,0] s -> (x, y) in[0,0] r))) & "
     "(A r1:[0,0] . A s1:[0,0] . "
     "(A x1:0 . A y1:0 . ((x1, y1) in[0,0] r1 -> (x1, y1) in[0,0] s1) & "
     "((x1, y1) in[0,0] s1 -> (x1, y1) in[0,0] r1)) -> r1 =[0,0] s1)"},
    {"PE3",
     "(A l:[0,0,0] . A m:[0,0,0] . l =[0,0,0] m -> "
     "(A x:0 . A y:0 . A z:0 . ((x, y, z) in[0,0,0] l -> (x, y, z) in[0,0,0] m) & "
     "((x, y, z) in[0,0,0] m -> (x, y, z) in[0,0,0] l))) & "
     "(A l1:[0,0,0] . A m1:[0,0,0] . "
     "(A x1:0 . A y1:0 . A z1:0 . ((x1, y1, z1) in[0,0,0] l1 -> (x1, y1, z1) in[0,0,0] m1) & "
     "((x1, y1, z1) in[0,0,0] m1 -> (x1, y1, z1) in[0,0,0] l1)) -> l1 =[0,0,0] m1)"},
};

}  // namespace

std::vector<NamedFormula> dedekind_axiom_library() {
  SignaturePtr sig = dedekind_signature();
  std::vector<NamedFormula> out = equality_axioms(*sig);
  for (const auto& [name, text] : kDedekindAxioms) out.push_back({name, parse(text, *sig)});
  return out;
}

}  // namespace infralog
