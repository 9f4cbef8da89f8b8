#pragma once

#include "folwb/formula.hpp"

namespace folwb {

// Formula builders over the membership language (relation mem/2). The
// Kuratowski machinery is fully unraveled: sets are not extensional here, so
// "represents" always means one of possibly many implementations.
namespace setfml {

FormulaRef mem(VarId x, VarId y);  // mem(x,y): x is an element of y

// s represents {x}
FormulaRef singleton_rep(VarId s, VarId x, VarId& fresh);
// t represents {x,y}
FormulaRef upair_rep(VarId t, VarId x, VarId y, VarId& fresh);
// u represents the Kuratowski pair <x,y>
FormulaRef pair_rep(VarId u, VarId x, VarId y, VarId& fresh);
// u represents a pair (components existentially quantified)
FormulaRef is_pair(VarId u, VarId& fresh);
// u and v are pairs with the same first component implying u = v, for all
// u, v in f; the function-hood condition, including pair-implementation
// uniqueness
FormulaRef is_function(VarId f, VarId& fresh);
// f implements a bijection between x and y
FormulaRef bijection(VarId f, VarId x, VarId y, VarId& fresh);
// x ~ y: some f implements a bijection between x and y
FormulaRef equinumerous(VarId x, VarId y, VarId& fresh);

// z has exactly the elements of x plus y ("adj" of the cardinal coding)
FormulaRef adjunction(VarId x, VarId y, VarId z, VarId& fresh);
// z is the union of x and y
FormulaRef union_of(VarId x, VarId y, VarId z, VarId& fresh);

// The successor / addition / multiplication ladder of the cardinal coding:
// levels 0 (structural), 1 (up to ~), 2 (adds uniqueness), and the final
// defaulted relation.
FormulaRef s0(VarId x, VarId y, VarId& fresh);
FormulaRef s1(VarId x, VarId y, VarId& fresh);
FormulaRef s2(VarId x, VarId y, VarId& fresh);
FormulaRef s_rho(VarId x, VarId y, VarId& fresh);
FormulaRef a0(VarId x, VarId y, VarId z, VarId& fresh);
FormulaRef a1(VarId x, VarId y, VarId z, VarId& fresh);
FormulaRef a2(VarId x, VarId y, VarId z, VarId& fresh);
FormulaRef a_rho(VarId x, VarId y, VarId z, VarId& fresh);
FormulaRef m0(VarId x, VarId y, VarId z, VarId& fresh);
FormulaRef m1(VarId x, VarId y, VarId z, VarId& fresh);
FormulaRef m2(VarId x, VarId y, VarId z, VarId& fresh);
FormulaRef m_rho(VarId x, VarId y, VarId z, VarId& fresh);

FormulaRef is_empty(VarId x, VarId& fresh);

// Pre-cardinal classes: the three PC0 conditions and the PC1 strengthening.
FormulaRef pc0(VarId x, VarId& fresh);
FormulaRef pc1(VarId x, VarId& fresh);

}  // namespace setfml

}  // namespace folwb
