#pragma once

#include <string>
#include <vector>

#include "infralog/formula.hpp"
#include "infralog/signature.hpp"

namespace infralog {

struct NamedFormula {
  std::string name;
  FormulaPtr formula;
};

// The equality axioms for a signature: reflexivity, symmetry and
// transitivity of each type equality, plus the change-of-equals principle
// for each bracket type:
//   E1  A x:t . x =t x
//   E2  A x,y:t . x =t y -> y =t x
//   E3  A x,y,z:t . x =t y & y =t z -> x =t z
//   E4  A x0,y0..xk,yk,u,v . x0 =t0 y0 & .. & u =t v ->
//         ((x0..xk) in[t] u <-> (y0..yk) in[t] v)
// E4's biconditional is spelled as two implications.
std::vector<NamedFormula> equality_axioms(const SignatureSpec& sig);

// The signature of the second-order ordered-field-with-cuts theory:
// types 0, [0], [0,0], [0,0,0]; constants zero, one : 0;
// neg, inv, leq : [0,0]; add, mul : [0,0,0].
SignaturePtr dedekind_signature();

// The axiom library over dedekind_signature(): the equality axioms per
// type, the relational field/order/cut axioms A1..A22, and the
// extensionality properties PE1..PE3. All formulas are closed.
std::vector<NamedFormula> dedekind_axiom_library();

}  // namespace infralog
