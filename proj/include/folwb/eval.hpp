#pragma once

#include <map>
#include <optional>

#include "folwb/formula.hpp"

namespace folwb {

using Assignment = std::map<VarId, Nat>;

// Evaluates f over the initial segment {0..bound} of the standard model:
// quantifiers range over that segment, Z/S/</=/E have their standard
// meanings. Free variables must be covered by the assignment. Existential
// truths are sound for the full model; universal claims are bound-relative.
bool bounded_eval(const FormulaRef& f, const Nat& bound,
                  const Assignment& assignment = {});

// Doubling-stability protocol: evaluates at bound and 2*bound and reports a
// value only when the two runs agree.
std::optional<bool> stable_bounded_eval(const FormulaRef& f, const Nat& bound,
                                        const Assignment& assignment = {});

// The pinned oracle bound schedule: maxconst + 2^(rank+2), computed from the
// formula (and never below 4).
Nat oracle_bound(const FormulaRef& f);

}  // namespace folwb
