#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "folwb/nat.hpp"
#include "folwb/signature.hpp"

namespace folwb {

using VarId = std::uint32_t;

// A term denotes S^offset(base). Nested S applications are always collapsed
// into the offset, so numerals are constant-size regardless of magnitude.
struct Term {
  enum class Base : std::uint8_t { Zero, Var };
  Base base = Base::Zero;
  VarId var = 0;
  Nat offset = 0;

  static Term zero(Nat off = 0) { return Term{Base::Zero, 0, std::move(off)}; }
  static Term variable(VarId v, Nat off = 0) {
    return Term{Base::Var, v, std::move(off)};
  }
  bool is_pure_var() const { return base == Base::Var && offset == 0; }
  bool is_ground() const { return base == Base::Zero; }
  Term shifted(const Nat& k) const { return Term{base, var, offset + k}; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.base == b.base && (a.base == Base::Zero || a.var == b.var) &&
           a.offset == b.offset;
  }
  friend bool operator<(const Term& a, const Term& b) {
    if (a.base != b.base) return a.base < b.base;
    if (a.base == Base::Var && a.var != b.var) return a.var < b.var;
    return a.offset < b.offset;
  }
};

struct Formula;
using FormulaRef = std::shared_ptr<const Formula>;

enum class Fk : std::uint8_t {
  Atom,     // rel(args)
  Eq,       // args[0] = args[1]
  Lt,       // args[0] < args[1]
  Not,      // ~child
  And, Or, Implies, Iff,
  Exists, Forall
};

// Immutable formula node. Connectives hold children in `kids`; quantifiers
// hold the bound variable in `qvar` and the body in kids[0].
struct Formula {
  Fk kind;
  std::string rel;            // Atom only
  std::vector<Term> args;     // Atom / Eq / Lt
  std::vector<FormulaRef> kids;
  VarId qvar = 0;

  bool is_atom() const { return kind == Fk::Atom || kind == Fk::Eq || kind == Fk::Lt; }
  bool is_quant() const { return kind == Fk::Exists || kind == Fk::Forall; }
};

// Constructors.
FormulaRef mk_atom(std::string rel, std::vector<Term> args);
FormulaRef mk_eq(Term a, Term b);
FormulaRef mk_lt(Term a, Term b);
FormulaRef mk_not(FormulaRef a);
FormulaRef mk_and(FormulaRef a, FormulaRef b);
FormulaRef mk_or(FormulaRef a, FormulaRef b);
FormulaRef mk_implies(FormulaRef a, FormulaRef b);
FormulaRef mk_iff(FormulaRef a, FormulaRef b);
FormulaRef mk_exists(VarId v, FormulaRef body);
FormulaRef mk_forall(VarId v, FormulaRef body);

// Right-nested conjunction/disjunction of a non-empty list.
FormulaRef mk_and_all(const std::vector<FormulaRef>& fs);
FormulaRef mk_or_all(const std::vector<FormulaRef>& fs);

// Closes all free variables universally (ascending index order).
FormulaRef universal_closure(const FormulaRef& f);
FormulaRef existential_closure(const FormulaRef& f);

bool ast_equal(const FormulaRef& a, const FormulaRef& b);

std::set<VarId> free_vars(const FormulaRef& f);
bool is_sentence(const FormulaRef& f);
VarId max_var(const FormulaRef& f);  // 0 if none; includes bound variables

// Largest numeral material in the formula: max over terms of offset, and of
// the value of ground terms. Drives the bounded-evaluation oracle schedule.
Nat max_constant(const FormulaRef& f);

std::size_t node_count(const FormulaRef& f);
std::uint32_t quantifier_rank(const FormulaRef& f);

// Depth of quantifier alternations, computed on the negation normal form
// after desugaring -> and <->. Literals count 0; And/Or take the max of
// their children; a maximal block of like quantifiers contributes 1 and
// each polarity switch in a nested chain adds 1.
std::uint32_t alternation_depth(const FormulaRef& f);

// Capture-avoiding substitution of a term for a free variable.
FormulaRef substitute(const FormulaRef& f, VarId var, const Term& t);

// Renames bound variables canonically: binders are numbered in pre-order,
// starting one past the largest free index. Free variables are untouched.
// Alpha-variants of the same tree map to the same result.
FormulaRef normalize_bound(const FormulaRef& f);

// Removes Implies/Iff (a->b becomes ~a|b; a<->b becomes (~a|b)&(~b|a)).
FormulaRef desugar(const FormulaRef& f);

// Negation normal form of a desugared formula: negations pushed to atoms.
FormulaRef nnf(const FormulaRef& f);

// The numeral formula for n, with x0 free. `unfolded` produces the recursive
// relational form over Z/1, S/2; `offset` produces the single equation
// x0 = S^n(0), constant AST size.
enum class NumeralStyle { Unfolded, Offset };
FormulaRef numeral_formula(const Nat& n, NumeralStyle style);

// Relational numeral with a designated free variable.
FormulaRef numeral_unfolded(const Nat& n, VarId free, VarId fresh_from);

// Checks that every atom conforms to the signature; throws otherwise.
void check_signature(const FormulaRef& f, const Signature& sig);

}  // namespace folwb
