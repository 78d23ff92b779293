#pragma once

#include <string>
#include <vector>

#include "infralog/formula.hpp"
#include "infralog/signature.hpp"

namespace infralog {

// Concrete formula syntax:
//
//   formula := ('A'|'E') ident ':' type '.' formula | impl
//   impl    := or ('->' impl)?            right-associative
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | atom | '(' formula ')'
//   atom    := term '=' type term
//            | term 'in' type term
//            | '(' term (',' term)* ')' 'in' type term
//
// The type is attached directly to '=' and 'in' (e.g. `=0`, `in[0,0]`).
// Precedence: ! > & > | > ->. Quantifier scope extends maximally right.
// 'A', 'E' and 'in' are reserved words. Variable types are declared at
// binders and inferred from atom positions for free variables.
FormulaPtr parse(const std::string& text, const SignatureSpec& sig);

// One formula per line; '#' starts a comment, blank lines are skipped.
std::vector<FormulaPtr> parse_lines(const std::string& text, const SignatureSpec& sig);

// Canonical printer; parse(print(f)) is structurally equal to f.
std::string print(const FormulaPtr& f);

}  // namespace infralog
