#pragma once

#include <optional>
#include <vector>

#include "folwb/formula.hpp"

namespace folwb {

struct QeResult {
  FormulaRef input;
  FormulaRef normal_form;  // quantifier-free, over difference constraints
  std::optional<bool> decision;  // present iff the input is a sentence
};

// Exact solution set of a one-free-variable formula over (N;0,S,<).
struct DefinableSet {
  bool cofinite = false;
  // Finite: `elements` lists the members exhaustively.
  // Cofinite: every natural >= threshold is a member and `elements` lists
  // the non-members, all of which are < threshold.
  Nat threshold = 0;
  std::vector<Nat> elements;

  bool contains(const Nat& x) const;
};

// Quantifier elimination for the language of (N;0,S,<). Accepts surface or
// relational input (relational Z/S atoms are folded back to offset terms).
// Procedure: desugar, NNF, trichotomy rewriting of negated atoms, then
// innermost-quantifier elimination by DNF and per-conjunct bound resolution
// over the naturals; universal quantifiers via the dual. All offset
// arithmetic is arbitrary-precision.
QeResult qe_eliminate(const FormulaRef& f);

// Truth in (N;0,S,<); total on sentences of the W-language.
bool decide_w(const FormulaRef& sentence);

// Truth in (N;0,S,<,E), decided through the two-dimensional pair coding into
// the W-language.
bool decide_wprime(const FormulaRef& sentence);

DefinableSet definable_set(const FormulaRef& one_free_var_formula);

}  // namespace folwb
