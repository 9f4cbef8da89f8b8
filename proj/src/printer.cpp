#include "folwb/printer.hpp"

#include <sstream>

namespace folwb {

namespace {
constexpr int kUnfoldLimit = 16;

void term_out(std::ostringstream& os, const Term& t) {
  if (t.offset > kUnfoldLimit) {
    os << "S^" << t.offset.str() << "(";
    if (t.base == Term::Base::Zero)
      os << "0";
    else
      os << "x" << t.var;
    os << ")";
    return;
  }
  for (Nat i = 0; i < t.offset; ++i) os << "S(";
  if (t.base == Term::Base::Zero)
    os << "0";
  else
    os << "x" << t.var;
  for (Nat i = 0; i < t.offset; ++i) os << ")";
}

// Precedence levels: quantifier 0, <-> 1, -> 2, | 3, & 4, ~ 5, atom 6.
int prec_of(const Formula& f) {
  switch (f.kind) {
    case Fk::Exists:
    case Fk::Forall: return 0;
    case Fk::Iff: return 1;
    case Fk::Implies: return 2;
    case Fk::Or: return 3;
    case Fk::And: return 4;
    case Fk::Not: return 5;
    default: return 6;
  }
}

const char* op_of(Fk k) {
  switch (k) {
    case Fk::Iff: return " <-> ";
    case Fk::Implies: return " -> ";
    case Fk::Or: return " | ";
    case Fk::And: return " & ";
    default: return "";
  }
}

void fml_out(std::ostringstream& os, const FormulaRef& f, int min_prec) {
  int p = prec_of(*f);
  bool paren = p < min_prec;
  if (paren) os << "(";
  switch (f->kind) {
    case Fk::Atom:
      os << f->rel << "(";
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) os << ",";
        term_out(os, f->args[i]);
      }
      os << ")";
      break;
    case Fk::Eq:
      term_out(os, f->args[0]);
      os << " = ";
      term_out(os, f->args[1]);
      break;
    case Fk::Lt:
      term_out(os, f->args[0]);
      os << " < ";
      term_out(os, f->args[1]);
      break;
    case Fk::Not:
      os << "~";
      fml_out(os, f->kids[0], 5);
      break;
    case Fk::And:
    case Fk::Or:
    case Fk::Implies:
    case Fk::Iff:
      // left-associated chains print flat; a right child at the same level
      // keeps its parentheses
      fml_out(os, f->kids[0], p);
      os << op_of(f->kind);
      fml_out(os, f->kids[1], p + 1);
      break;
    case Fk::Exists:
    case Fk::Forall:
      os << (f->kind == Fk::Exists ? "exists x" : "forall x") << f->qvar
         << ". ";
      fml_out(os, f->kids[0], 0);
      break;
  }
  if (paren) os << ")";
}
}  // namespace

std::string print_term(const Term& t) {
  std::ostringstream os;
  term_out(os, t);
  return os.str();
}

std::string print_canonical(const FormulaRef& f) {
  std::ostringstream os;
  fml_out(os, f, 0);
  return os.str();
}

}  // namespace folwb
