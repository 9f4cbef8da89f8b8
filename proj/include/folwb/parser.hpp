#pragma once

#include <stdexcept>
#include <string>

#include "folwb/formula.hpp"
#include "folwb/signature.hpp"

namespace folwb {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

// Parses the surface grammar. All symbols must be declared in `sig`
// (equality is always available). Whitespace-insensitive; '#' starts a
// comment running to end of line. S^k(t) is accepted as shorthand for a
// k-fold S application.
FormulaRef parse_formula(const std::string& text, const Signature& sig);

}  // namespace folwb
