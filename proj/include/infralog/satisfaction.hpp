#pragma once

#include "infralog/evaluation.hpp"
#include "infralog/formula.hpp"
#include "infralog/system.hpp"

namespace infralog {

// Generalized satisfaction reads atoms through the system's generalized
// equality and belonging relations; standard satisfaction reads them with
// plain = and set membership on the same terminals.
enum class SatMode { Generalized, Standard };

// The inductive satisfaction relation. Quantifiers range over the full
// terminal of the bound variable's type (budget-guarded); the given
// evaluation must cover the free variables.
bool satisfies(const System& system, const FormulaPtr& formula, const Evaluation& eval,
               SatMode mode = SatMode::Generalized);

}  // namespace infralog
