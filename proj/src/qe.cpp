#include "folwb/qe.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "folwb/translation.hpp"
#include "folwb/unwind.hpp"

namespace folwb {

namespace {

// A difference constraint between two offset terms.
struct Constr {
  Term l, r;
  bool eq;  // true: l = r, false: l < r

  friend bool operator<(const Constr& a, const Constr& b) {
    if (a.eq != b.eq) return a.eq < b.eq;
    if (!(a.l == b.l)) return a.l < b.l;
    return a.r < b.r;
  }
  friend bool operator==(const Constr& a, const Constr& b) {
    return a.eq == b.eq && a.l == b.l && a.r == b.r;
  }
};

using Conjunct = std::set<Constr>;
using Dnf = std::vector<Conjunct>;

// Cancels the shared offset and decides ground or same-variable atoms.
// Returns the canonical constraint, or a decision if the atom is constant.
std::optional<bool> canonicalize(Constr& c) {
  Nat m = std::min(c.l.offset, c.r.offset);
  c.l.offset -= m;
  c.r.offset -= m;
  bool lg = c.l.base == Term::Base::Zero;
  bool rg = c.r.base == Term::Base::Zero;
  if (lg && rg)
    return c.eq ? c.l.offset == c.r.offset : c.l.offset < c.r.offset;
  if (!lg && !rg && c.l.var == c.r.var)
    return c.eq ? c.l.offset == c.r.offset : c.l.offset < c.r.offset;
  if (c.eq && c.r < c.l) std::swap(c.l, c.r);
  return std::nullopt;
}

// true = add to conjunct; false = conjunct is contradictory
bool add_constr(Conjunct& cj, Constr c) {
  auto dec = canonicalize(c);
  if (dec) return *dec;
  cj.insert(std::move(c));
  return true;
}

void dedupe(Dnf& d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
}

// f must be a positive combination of And/Or/Eq/Lt over terms.
Dnf to_dnf(const FormulaRef& f) {
  switch (f->kind) {
    case Fk::Eq:
    case Fk::Lt: {
      Conjunct cj;
      if (!add_constr(cj, {f->args[0], f->args[1], f->kind == Fk::Eq}))
        return {};
      return {std::move(cj)};
    }
    case Fk::And: {
      Dnf a = to_dnf(f->kids[0]);
      if (a.empty()) return {};
      Dnf b = to_dnf(f->kids[1]);
      Dnf out;
      for (const auto& x : a)
        for (const auto& y : b) {
          Conjunct cj = x;
          bool ok = true;
          for (const auto& c : y)
            if (!add_constr(cj, c)) {
              ok = false;
              break;
            }
          if (ok) out.push_back(std::move(cj));
        }
      dedupe(out);
      return out;
    }
    case Fk::Or: {
      Dnf a = to_dnf(f->kids[0]);
      Dnf b = to_dnf(f->kids[1]);
      a.insert(a.end(), b.begin(), b.end());
      dedupe(a);
      return a;
    }
    default:
      throw std::logic_error("to_dnf: non-positive or quantified input");
  }
}

FormulaRef true_form() { return mk_eq(Term::zero(), Term::zero()); }
FormulaRef false_form() { return mk_lt(Term::zero(), Term::zero()); }

bool is_true_form(const FormulaRef& f) {
  return f->kind == Fk::Eq && f->args[0].is_ground() &&
         f->args[1].is_ground() && f->args[0].offset == f->args[1].offset;
}
bool is_false_form(const FormulaRef& f) {
  return f->kind == Fk::Lt && f->args[0].is_ground() &&
         f->args[1].is_ground() && !(f->args[0].offset < f->args[1].offset);
}

FormulaRef from_dnf(const Dnf& d) {
  if (d.empty()) return false_form();
  std::vector<FormulaRef> disjuncts;
  for (const auto& cj : d) {
    if (cj.empty()) return true_form();
    std::vector<FormulaRef> atoms;
    for (const auto& c : cj)
      atoms.push_back(c.eq ? mk_eq(c.l, c.r) : mk_lt(c.l, c.r));
    disjuncts.push_back(mk_and_all(atoms));
  }
  return mk_or_all(disjuncts);
}

// Rewrites ~ at atoms by trichotomy; input in NNF. Output is positive.
FormulaRef trichotomize(const FormulaRef& f) {
  switch (f->kind) {
    case Fk::Eq:
    case Fk::Lt:
    case Fk::Atom:
      return f;
    case Fk::Not: {
      const FormulaRef& a = f->kids[0];
      if (a->kind == Fk::Lt)
        return mk_or(mk_lt(a->args[1], a->args[0]),
                     mk_eq(a->args[0], a->args[1]));
      if (a->kind == Fk::Eq)
        return mk_or(mk_lt(a->args[0], a->args[1]),
                     mk_lt(a->args[1], a->args[0]));
      throw std::logic_error("trichotomize: negation not at an atom");
    }
    case Fk::And:
      return mk_and(trichotomize(f->kids[0]), trichotomize(f->kids[1]));
    case Fk::Or:
      return mk_or(trichotomize(f->kids[0]), trichotomize(f->kids[1]));
    case Fk::Exists:
      return mk_exists(f->qvar, trichotomize(f->kids[0]));
    case Fk::Forall:
      return mk_forall(f->qvar, trichotomize(f->kids[0]));
    default:
      throw std::logic_error("trichotomize: formula not desugared");
  }
}

// Positive quantifier-free negation: De Morgan plus trichotomy at atoms.
FormulaRef negate_qf(const FormulaRef& f) {
  switch (f->kind) {
    case Fk::Eq:
      return mk_or(mk_lt(f->args[0], f->args[1]),
                   mk_lt(f->args[1], f->args[0]));
    case Fk::Lt:
      return mk_or(mk_lt(f->args[1], f->args[0]),
                   mk_eq(f->args[0], f->args[1]));
    case Fk::And:
      return mk_or(negate_qf(f->kids[0]), negate_qf(f->kids[1]));
    case Fk::Or:
      return mk_and(negate_qf(f->kids[0]), negate_qf(f->kids[1]));
    default:
      throw std::logic_error("negate_qf: input not positive quantifier-free");
  }
}

bool mentions(const Term& t, VarId v) {
  return t.base == Term::Base::Var && t.var == v;
}

// Resolves exists v over one conjunct. Returns the solved conjunct, or
// nullopt when contradictory.
std::optional<Conjunct> solve(VarId v, const Conjunct& cj) {
  Conjunct out;
  std::vector<std::pair<Nat, Term>> lowers;  // t < v+a as (a, t)
  std::vector<std::pair<Nat, Term>> uppers;  // v+c < u as (c, u)
  std::optional<std::pair<Nat, Term>> equation;  // v+a = t as (a, t)
  std::vector<Constr> vconstrs;

  for (const auto& c : cj) {
    bool lv = mentions(c.l, v), rv = mentions(c.r, v);
    if (!lv && !rv) {
      out.insert(c);
      continue;
    }
    vconstrs.push_back(c);
    if (c.eq) {
      if (!equation)
        equation = lv ? std::make_pair(c.l.offset, c.r)
                      : std::make_pair(c.r.offset, c.l);
    } else if (lv) {
      uppers.emplace_back(c.l.offset, c.r);
    } else {
      lowers.emplace_back(c.r.offset, c.l);
    }
  }

  if (equation) {
    const auto& [a, t] = *equation;
    // solvability: value(t) >= a
    if (t.base == Term::Base::Zero) {
      if (t.offset < a) return std::nullopt;
    } else if (t.offset < a) {
      // y + b >= a with b < a, i.e. y > a-b-1
      if (!add_constr(out, {Term::zero(a - t.offset - 1),
                            Term::variable(t.var), false}))
        return std::nullopt;
    }
    // substitute v := t - a into the remaining v-constraints by shifting
    // both sides up by a
    for (const auto& c : vconstrs) {
      bool lv = mentions(c.l, v);
      Term vt = lv ? c.l : c.r;
      Term w = lv ? c.r : c.l;
      if (c.eq && vt.offset == a && w == t) continue;  // the equation itself
      Term lhs = t.shifted(vt.offset);
      Term rhs = w.shifted(a);
      Constr nc = lv ? Constr{lhs, rhs, c.eq} : Constr{rhs, lhs, c.eq};
      if (!add_constr(out, nc)) return std::nullopt;
    }
    return out;
  }

  if (uppers.empty()) return out;  // upward-unbounded domain
  for (const auto& [c, u] : uppers) {
    // witness 0 must satisfy the upper bound when no lower bound binds
    if (!add_constr(out, {Term::zero(c), u, false})) return std::nullopt;
  }
  for (const auto& [a, l] : lowers)
    for (const auto& [c, u] : uppers) {
      // discreteness gap: l + c + 1 < u + a
      if (!add_constr(out, {l.shifted(c + 1), u.shifted(a), false}))
        return std::nullopt;
    }
  return out;
}

FormulaRef simplify_bool(Fk kind, const FormulaRef& a, const FormulaRef& b) {
  if (kind == Fk::And) {
    if (is_false_form(a) || is_false_form(b)) return false_form();
    if (is_true_form(a)) return b;
    if (is_true_form(b)) return a;
    return mk_and(a, b);
  }
  if (is_true_form(a) || is_true_form(b)) return true_form();
  if (is_false_form(a)) return b;
  if (is_false_form(b)) return a;
  return mk_or(a, b);
}

FormulaRef eliminate_exists(VarId v, const FormulaRef& qf_body) {
  Dnf d = to_dnf(qf_body);
  Dnf solved;
  for (const auto& cj : d) {
    auto s = solve(v, cj);
    if (s) solved.push_back(std::move(*s));
  }
  dedupe(solved);
  return from_dnf(solved);
}

FormulaRef elim(const FormulaRef& f) {
  switch (f->kind) {
    case Fk::Eq:
    case Fk::Lt: {
      Constr c{f->args[0], f->args[1], f->kind == Fk::Eq};
      auto dec = canonicalize(c);
      if (dec) return *dec ? true_form() : false_form();
      return c.eq ? mk_eq(c.l, c.r) : mk_lt(c.l, c.r);
    }
    case Fk::And:
    case Fk::Or:
      return simplify_bool(f->kind, elim(f->kids[0]), elim(f->kids[1]));
    case Fk::Exists:
      return eliminate_exists(f->qvar, elim(f->kids[0]));
    case Fk::Forall: {
      auto inner = negate_qf(elim(f->kids[0]));
      return negate_qf(eliminate_exists(f->qvar, inner));
    }
    default:
      throw std::logic_error("qe: unexpected node after preprocessing");
  }
}

bool ground_eval(const FormulaRef& f) {
  switch (f->kind) {
    case Fk::Eq: return f->args[0].offset == f->args[1].offset;
    case Fk::Lt: return f->args[0].offset < f->args[1].offset;
    case Fk::And: return ground_eval(f->kids[0]) && ground_eval(f->kids[1]);
    case Fk::Or: return ground_eval(f->kids[0]) || ground_eval(f->kids[1]);
    default:
      throw std::logic_error("ground_eval: non-ground normal form");
  }
}

// Evaluates a quantifier-free one-variable normal form at v := x.
bool qf_eval_at(const FormulaRef& f, VarId v, const Nat& x) {
  auto val = [&](const Term& t) {
    return t.base == Term::Base::Zero ? t.offset : x + t.offset;
  };
  switch (f->kind) {
    case Fk::Eq: return val(f->args[0]) == val(f->args[1]);
    case Fk::Lt: return val(f->args[0]) < val(f->args[1]);
    case Fk::And: return qf_eval_at(f->kids[0], v, x) && qf_eval_at(f->kids[1], v, x);
    case Fk::Or: return qf_eval_at(f->kids[0], v, x) || qf_eval_at(f->kids[1], v, x);
    default:
      throw std::logic_error("qf_eval_at: not a normal form");
  }
}

}  // namespace

bool DefinableSet::contains(const Nat& x) const {
  bool listed = std::binary_search(elements.begin(), elements.end(), x);
  if (!cofinite) return listed;
  return x >= threshold || !listed;
}

QeResult qe_eliminate(const FormulaRef& f) {
  auto g = trichotomize(nnf(desugar(refold_terms(f))));
  auto normal = elim(g);
  QeResult res{f, normal, std::nullopt};
  if (is_sentence(f)) res.decision = ground_eval(normal);
  return res;
}

bool decide_w(const FormulaRef& sentence) {
  if (!is_sentence(sentence))
    throw std::invalid_argument("decide_w: input has free variables");
  auto res = qe_eliminate(sentence);
  return *res.decision;
}

bool decide_wprime(const FormulaRef& sentence) {
  if (!is_sentence(sentence))
    throw std::invalid_argument("decide_wprime: input has free variables");
  const auto& iota = builtin_translation("iota");
  return decide_w(translate(iota, normalize_bound(unwind_terms(sentence))));
}

DefinableSet definable_set(const FormulaRef& f) {
  auto fv = free_vars(f);
  if (fv.size() != 1)
    throw std::invalid_argument("definable_set: expects exactly one free variable");
  VarId v = *fv.begin();
  auto res = qe_eliminate(f);

  // stabilization point: beyond every ground offset the atoms are constant
  Nat maxc = 0;
  std::vector<FormulaRef> stack{res.normal_form};
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    if (g->is_atom()) {
      for (const auto& t : g->args)
        if (t.base == Term::Base::Zero) maxc = std::max(maxc, t.offset);
      continue;
    }
    for (const auto& k : g->kids) stack.push_back(k);
  }
  Nat top = maxc + 2;

  std::vector<Nat> members;
  for (Nat x = 0; x <= top; ++x)
    if (qf_eval_at(res.normal_form, v, x)) members.push_back(x);

  bool tail = !members.empty() && members.back() == top;
  DefinableSet out;
  if (!tail) {
    out.cofinite = false;
    out.elements = std::move(members);
    return out;
  }
  // least threshold t with [t, inf) included
  Nat t = top;
  {
    std::set<Nat> memset(members.begin(), members.end());
    while (t > 0 && memset.count(t - 1)) --t;
    out.cofinite = true;
    out.threshold = t;
    for (Nat x = 0; x < t; ++x)
      if (!memset.count(x)) out.elements.push_back(x);
  }
  return out;
}

}  // namespace folwb
