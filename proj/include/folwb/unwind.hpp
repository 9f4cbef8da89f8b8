#pragma once

#include "folwb/formula.hpp"

namespace folwb {

// Forward term-unwinding: rewrites every atom containing 0 or S-offsets into
// an existential block over fresh variables chained by the relational S/2 and
// anchored at Z/1. The result contains only pure-variable atoms. Equivalent
// over the standard model; equations ending in a pure variable reuse it as
// the chain target, so e.g. x0 = S(x1) becomes the single atom S(x1,x0).
FormulaRef unwind_terms(const FormulaRef& f);

// Partial inverse used by the decision procedure: folds relational Z/1 and
// S/2 atoms back into offset terms (Z(v) to v = 0, S(u,v) to S(u) = v).
// Throws on relations other than Z, S, <, =.
FormulaRef refold_terms(const FormulaRef& f);

}  // namespace folwb
