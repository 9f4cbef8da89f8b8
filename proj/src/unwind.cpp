#include "folwb/unwind.hpp"

#include <stdexcept>

namespace folwb {

namespace {

// Emits the chain formula forcing `target` = value of `t`, using fresh
// variables; appends the introduced variables to `fresh_vars` and the chain
// atoms to `conj`. `target` must already be chosen (fresh or reused).
void chain_to(const Term& t, VarId target, VarId& next,
              std::vector<VarId>& fresh_vars, std::vector<FormulaRef>& conj) {
  if (t.offset == 0) {
    if (t.base == Term::Base::Zero) {
      conj.push_back(mk_atom("Z", {Term::variable(target)}));
    } else {
      conj.push_back(mk_eq(Term::variable(t.var), Term::variable(target)));
    }
    return;
  }
  // anchor variable for the base
  VarId prev;
  if (t.base == Term::Base::Zero) {
    prev = next++;
    fresh_vars.push_back(prev);
    conj.push_back(mk_atom("Z", {Term::variable(prev)}));
  } else {
    prev = t.var;
  }
  if (t.offset > 4096)
    throw std::invalid_argument("unwind_terms: offset too large to unfold");
  std::uint64_t k = t.offset.convert_to<std::uint64_t>();
  for (std::uint64_t i = 1; i < k; ++i) {
    VarId v = next++;
    fresh_vars.push_back(v);
    conj.push_back(mk_atom("S", {Term::variable(prev), Term::variable(v)}));
    prev = v;
  }
  conj.push_back(
      mk_atom("S", {Term::variable(prev), Term::variable(target)}));
}

FormulaRef unwind_atom(const FormulaRef& f, VarId& next) {
  // equations with a pure-variable side aim the chain at that variable
  if (f->kind == Fk::Eq) {
    Term a = f->args[0], b = f->args[1];
    if (a.is_pure_var() && b.is_pure_var()) return f;
    if (a.is_pure_var() && !b.is_pure_var()) std::swap(a, b);
    if (b.is_pure_var()) {
      std::vector<VarId> fresh;
      std::vector<FormulaRef> conj;
      chain_to(a, b.var, next, fresh, conj);
      FormulaRef body = mk_and_all(conj);
      for (auto it = fresh.rbegin(); it != fresh.rend(); ++it)
        body = mk_exists(*it, body);
      return body;
    }
    // neither side pure: meet at a fresh variable
    std::vector<VarId> fresh;
    std::vector<FormulaRef> conj;
    VarId w = next++;
    fresh.push_back(w);
    chain_to(a, w, next, fresh, conj);
    chain_to(b, w, next, fresh, conj);
    FormulaRef body = mk_and_all(conj);
    for (auto it = fresh.rbegin(); it != fresh.rend(); ++it)
      body = mk_exists(*it, body);
    return body;
  }

  bool all_pure = true;
  for (const auto& t : f->args)
    if (!t.is_pure_var()) all_pure = false;
  if (all_pure) return f;

  std::vector<VarId> fresh;
  std::vector<FormulaRef> conj;
  std::vector<Term> new_args;
  for (const auto& t : f->args) {
    if (t.is_pure_var()) {
      new_args.push_back(t);
    } else {
      VarId w = next++;
      fresh.push_back(w);
      chain_to(t, w, next, fresh, conj);
      new_args.push_back(Term::variable(w));
    }
  }
  conj.push_back(f->kind == Fk::Lt ? mk_lt(new_args[0], new_args[1])
                                   : mk_atom(f->rel, std::move(new_args)));
  FormulaRef body = mk_and_all(conj);
  for (auto it = fresh.rbegin(); it != fresh.rend(); ++it)
    body = mk_exists(*it, body);
  return body;
}

FormulaRef unwind_rec(const FormulaRef& f, VarId& next) {
  if (f->is_atom()) return unwind_atom(f, next);
  if (f->is_quant()) {
    auto body = unwind_rec(f->kids[0], next);
    return f->kind == Fk::Exists ? mk_exists(f->qvar, body)
                                 : mk_forall(f->qvar, body);
  }
  std::vector<FormulaRef> kids;
  for (const auto& k : f->kids) kids.push_back(unwind_rec(k, next));
  switch (f->kind) {
    case Fk::Not: return mk_not(kids[0]);
    case Fk::And: return mk_and(kids[0], kids[1]);
    case Fk::Or: return mk_or(kids[0], kids[1]);
    case Fk::Implies: return mk_implies(kids[0], kids[1]);
    case Fk::Iff: return mk_iff(kids[0], kids[1]);
    default: throw std::logic_error("unwind: unreachable");
  }
}

}  // namespace

FormulaRef unwind_terms(const FormulaRef& f) {
  VarId next = max_var(f) + 1;
  return unwind_rec(f, next);
}

namespace {
FormulaRef refold_atom(const FormulaRef& f) {
  if (f->kind == Fk::Atom) {
    if (f->rel == "Z") return mk_eq(f->args[0], Term::zero());
    if (f->rel == "S") return mk_eq(f->args[0].shifted(1), f->args[1]);
    throw std::invalid_argument("refold_terms: relation '" + f->rel +
                                "' is outside the order language");
  }
  return f;
}
}  // namespace

FormulaRef refold_terms(const FormulaRef& f) {
  if (f->is_atom()) return refold_atom(f);
  if (f->is_quant()) {
    auto body = refold_terms(f->kids[0]);
    return f->kind == Fk::Exists ? mk_exists(f->qvar, body)
                                 : mk_forall(f->qvar, body);
  }
  std::vector<FormulaRef> kids;
  for (const auto& k : f->kids) kids.push_back(refold_terms(k));
  switch (f->kind) {
    case Fk::Not: return mk_not(kids[0]);
    case Fk::And: return mk_and(kids[0], kids[1]);
    case Fk::Or: return mk_or(kids[0], kids[1]);
    case Fk::Implies: return mk_implies(kids[0], kids[1]);
    case Fk::Iff: return mk_iff(kids[0], kids[1]);
    default: throw std::logic_error("refold: unreachable");
  }
}

}  // namespace folwb
