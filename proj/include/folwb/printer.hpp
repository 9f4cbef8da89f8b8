#pragma once

#include <string>

#include "folwb/formula.hpp"

namespace folwb {

// Deterministic text form; parse(print_canonical(f)) == f up to AST equality.
// Binary connectives associate to the left and are minimally parenthesized.
// Offsets above a small limit print as S^k(...) rather than nested S.
std::string print_canonical(const FormulaRef& f);
std::string print_term(const Term& t);

}  // namespace folwb
