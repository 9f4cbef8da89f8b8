#include "folwb/formula.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace folwb {

namespace {
FormulaRef node(Fk k, std::string rel, std::vector<Term> args,
                std::vector<FormulaRef> kids, VarId qv = 0) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->rel = std::move(rel);
  f->args = std::move(args);
  f->kids = std::move(kids);
  f->qvar = qv;
  return f;
}
}  // namespace

FormulaRef mk_atom(std::string rel, std::vector<Term> args) {
  return node(Fk::Atom, std::move(rel), std::move(args), {});
}
FormulaRef mk_eq(Term a, Term b) {
  return node(Fk::Eq, "", {std::move(a), std::move(b)}, {});
}
FormulaRef mk_lt(Term a, Term b) {
  return node(Fk::Lt, "", {std::move(a), std::move(b)}, {});
}
FormulaRef mk_not(FormulaRef a) { return node(Fk::Not, "", {}, {std::move(a)}); }
FormulaRef mk_and(FormulaRef a, FormulaRef b) {
  return node(Fk::And, "", {}, {std::move(a), std::move(b)});
}
FormulaRef mk_or(FormulaRef a, FormulaRef b) {
  return node(Fk::Or, "", {}, {std::move(a), std::move(b)});
}
FormulaRef mk_implies(FormulaRef a, FormulaRef b) {
  return node(Fk::Implies, "", {}, {std::move(a), std::move(b)});
}
FormulaRef mk_iff(FormulaRef a, FormulaRef b) {
  return node(Fk::Iff, "", {}, {std::move(a), std::move(b)});
}
FormulaRef mk_exists(VarId v, FormulaRef body) {
  return node(Fk::Exists, "", {}, {std::move(body)}, v);
}
FormulaRef mk_forall(VarId v, FormulaRef body) {
  return node(Fk::Forall, "", {}, {std::move(body)}, v);
}

FormulaRef mk_and_all(const std::vector<FormulaRef>& fs) {
  if (fs.empty()) throw std::invalid_argument("mk_and_all: empty list");
  FormulaRef acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = mk_and(fs[i], acc);
  return acc;
}
FormulaRef mk_or_all(const std::vector<FormulaRef>& fs) {
  if (fs.empty()) throw std::invalid_argument("mk_or_all: empty list");
  FormulaRef acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = mk_or(fs[i], acc);
  return acc;
}

FormulaRef universal_closure(const FormulaRef& f) {
  auto fv = free_vars(f);
  FormulaRef g = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) g = mk_forall(*it, g);
  return g;
}
FormulaRef existential_closure(const FormulaRef& f) {
  auto fv = free_vars(f);
  FormulaRef g = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) g = mk_exists(*it, g);
  return g;
}

bool ast_equal(const FormulaRef& a, const FormulaRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->rel != b->rel || a->qvar != b->qvar)
    return false;
  if (a->args != b->args) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!ast_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {
void free_vars_rec(const FormulaRef& f, std::set<VarId>& bound,
                   std::set<VarId>& out) {
  if (f->is_atom()) {
    for (const auto& t : f->args)
      if (t.base == Term::Base::Var && !bound.count(t.var)) out.insert(t.var);
    return;
  }
  if (f->is_quant()) {
    bool was = bound.count(f->qvar) != 0;
    bound.insert(f->qvar);
    free_vars_rec(f->kids[0], bound, out);
    if (!was) bound.erase(f->qvar);
    return;
  }
  for (const auto& k : f->kids) free_vars_rec(k, bound, out);
}
}  // namespace

std::set<VarId> free_vars(const FormulaRef& f) {
  std::set<VarId> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

bool is_sentence(const FormulaRef& f) { return free_vars(f).empty(); }

VarId max_var(const FormulaRef& f) {
  VarId m = 0;
  if (f->is_atom()) {
    for (const auto& t : f->args)
      if (t.base == Term::Base::Var) m = std::max(m, t.var);
    return m;
  }
  if (f->is_quant()) m = f->qvar;
  for (const auto& k : f->kids) m = std::max(m, max_var(k));
  return m;
}

Nat max_constant(const FormulaRef& f) {
  Nat m = 0;
  if (f->is_atom()) {
    for (const auto& t : f->args) m = std::max(m, t.offset);
    return m;
  }
  for (const auto& k : f->kids) m = std::max(m, max_constant(k));
  return m;
}

std::size_t node_count(const FormulaRef& f) {
  std::size_t n = 1;
  for (const auto& k : f->kids) n += node_count(k);
  return n;
}

std::uint32_t quantifier_rank(const FormulaRef& f) {
  std::uint32_t m = 0;
  for (const auto& k : f->kids) m = std::max(m, quantifier_rank(k));
  return f->is_quant() ? m + 1 : m;
}

namespace {
// Returns {depth, kind of the outermost quantifier block} where kind is
// Fk::Exists, Fk::Forall, or Fk::Atom for "no block".
std::pair<std::uint32_t, Fk> alt_depth(const FormulaRef& f) {
  switch (f->kind) {
    case Fk::Atom:
    case Fk::Eq:
    case Fk::Lt:
      return {0, Fk::Atom};
    case Fk::Not:  // NNF: negation only wraps atoms
      return {0, Fk::Atom};
    case Fk::And:
    case Fk::Or: {
      std::uint32_t m = 0;
      for (const auto& k : f->kids) m = std::max(m, alt_depth(k).first);
      return {m, Fk::Atom};
    }
    case Fk::Exists:
    case Fk::Forall: {
      auto [d, outer] = alt_depth(f->kids[0]);
      if (outer == f->kind) return {d, f->kind};
      return {d + 1, f->kind};
    }
    default:
      throw std::logic_error("alternation_depth: formula not desugared");
  }
}
}  // namespace

std::uint32_t alternation_depth(const FormulaRef& f) {
  return alt_depth(nnf(desugar(f))).first;
}

namespace {
FormulaRef rename_free(const FormulaRef& f, VarId from, VarId to);

FormulaRef subst_rec(const FormulaRef& f, VarId var, const Term& t,
                     VarId& fresh) {
  if (f->is_atom()) {
    std::vector<Term> args;
    args.reserve(f->args.size());
    for (const auto& a : f->args) {
      if (a.base == Term::Base::Var && a.var == var)
        args.push_back(t.shifted(a.offset));
      else
        args.push_back(a);
    }
    if (args == f->args) return f;
    return node(f->kind, f->rel, std::move(args), {});
  }
  if (f->is_quant()) {
    if (f->qvar == var) return f;  // var is bound here
    if (t.base == Term::Base::Var && t.var == f->qvar &&
        free_vars(f->kids[0]).count(var)) {
      // would capture: rename the binder first
      VarId nv = fresh++;
      auto body = rename_free(f->kids[0], f->qvar, nv);
      return node(f->kind, "", {}, {subst_rec(body, var, t, fresh)}, nv);
    }
    return node(f->kind, "", {}, {subst_rec(f->kids[0], var, t, fresh)},
                f->qvar);
  }
  std::vector<FormulaRef> kids;
  kids.reserve(f->kids.size());
  for (const auto& k : f->kids) kids.push_back(subst_rec(k, var, t, fresh));
  return node(f->kind, "", {}, std::move(kids), 0);
}

FormulaRef rename_free(const FormulaRef& f, VarId from, VarId to) {
  if (f->is_atom()) {
    std::vector<Term> args = f->args;
    for (auto& a : args)
      if (a.base == Term::Base::Var && a.var == from) a.var = to;
    return node(f->kind, f->rel, std::move(args), {});
  }
  if (f->is_quant()) {
    if (f->qvar == from) return f;
    return node(f->kind, "", {}, {rename_free(f->kids[0], from, to)}, f->qvar);
  }
  std::vector<FormulaRef> kids;
  for (const auto& k : f->kids) kids.push_back(rename_free(k, from, to));
  return node(f->kind, "", {}, std::move(kids), 0);
}
}  // namespace

FormulaRef substitute(const FormulaRef& f, VarId var, const Term& t) {
  VarId fresh = std::max(max_var(f),
                         t.base == Term::Base::Var ? t.var : VarId{0}) +
                1;
  return subst_rec(f, var, t, fresh);
}

namespace {
FormulaRef norm_rec(const FormulaRef& f, std::map<VarId, VarId>& env,
                    VarId& next) {
  if (f->is_atom()) {
    std::vector<Term> args = f->args;
    for (auto& a : args) {
      if (a.base != Term::Base::Var) continue;
      auto it = env.find(a.var);
      if (it != env.end()) a.var = it->second;
    }
    return node(f->kind, f->rel, std::move(args), {});
  }
  if (f->is_quant()) {
    VarId nv = next++;
    auto it = env.find(f->qvar);
    std::optional<VarId> saved;
    if (it != env.end()) saved = it->second;
    env[f->qvar] = nv;
    auto body = norm_rec(f->kids[0], env, next);
    if (saved)
      env[f->qvar] = *saved;
    else
      env.erase(f->qvar);
    return node(f->kind, "", {}, {body}, nv);
  }
  std::vector<FormulaRef> kids;
  for (const auto& k : f->kids) kids.push_back(norm_rec(k, env, next));
  return node(f->kind, "", {}, std::move(kids), 0);
}
}  // namespace

FormulaRef normalize_bound(const FormulaRef& f) {
  auto fv = free_vars(f);
  VarId next = fv.empty() ? 0 : *fv.rbegin() + 1;
  std::map<VarId, VarId> env;
  return norm_rec(f, env, next);
}

FormulaRef desugar(const FormulaRef& f) {
  if (f->is_atom()) return f;
  if (f->is_quant())
    return node(f->kind, "", {}, {desugar(f->kids[0])}, f->qvar);
  auto a = desugar(f->kids[0]);
  FormulaRef b = f->kids.size() > 1 ? desugar(f->kids[1]) : nullptr;
  switch (f->kind) {
    case Fk::Not: return mk_not(a);
    case Fk::And: return mk_and(a, b);
    case Fk::Or: return mk_or(a, b);
    case Fk::Implies: return mk_or(mk_not(a), b);
    case Fk::Iff: return mk_and(mk_or(mk_not(a), b), mk_or(mk_not(b), a));
    default: throw std::logic_error("desugar: unreachable");
  }
}

namespace {
FormulaRef nnf_rec(const FormulaRef& f, bool neg) {
  if (f->is_atom()) return neg ? mk_not(f) : f;
  switch (f->kind) {
    case Fk::Not: return nnf_rec(f->kids[0], !neg);
    case Fk::And:
    case Fk::Or: {
      auto a = nnf_rec(f->kids[0], neg);
      auto b = nnf_rec(f->kids[1], neg);
      bool conj = (f->kind == Fk::And) != neg;
      return conj ? mk_and(a, b) : mk_or(a, b);
    }
    case Fk::Exists:
    case Fk::Forall: {
      auto body = nnf_rec(f->kids[0], neg);
      bool ex = (f->kind == Fk::Exists) != neg;
      return ex ? mk_exists(f->qvar, body) : mk_forall(f->qvar, body);
    }
    default:
      throw std::logic_error("nnf: formula not desugared");
  }
}
}  // namespace

FormulaRef nnf(const FormulaRef& f) { return nnf_rec(f, false); }

FormulaRef numeral_unfolded(const Nat& n, VarId free, VarId fresh_from) {
  if (n == 0) return mk_atom("Z", {Term::variable(free)});
  // n~(x) := exists y (ñ_{n-1}(y) & S(y,x)); fresh variables from the top of
  // the chain down.
  VarId y = fresh_from;
  return mk_exists(
      y, mk_and(numeral_unfolded(n - 1, y, fresh_from + 1),
                mk_atom("S", {Term::variable(y), Term::variable(free)})));
}

FormulaRef numeral_formula(const Nat& n, NumeralStyle style) {
  if (style == NumeralStyle::Offset)
    return mk_eq(Term::variable(0), Term::zero(n));
  if (n > 4096)
    throw std::invalid_argument("numeral_formula: unfolded form too large");
  return numeral_unfolded(n, 0, 1);
}

namespace {
void check_term(const Term& t, const Signature& sig) {
  if (t.base == Term::Base::Zero && !sig.has_constant("0"))
    throw std::invalid_argument("signature " + sig.name + " has no constant 0");
  if (t.offset > 0 && !sig.has_function("S"))
    throw std::invalid_argument("signature " + sig.name + " has no function S");
}
}  // namespace

void check_signature(const FormulaRef& f, const Signature& sig) {
  if (f->is_atom()) {
    if (f->kind == Fk::Atom) {
      auto ar = sig.relation_arity(f->rel);
      if (!ar)
        throw std::invalid_argument("unknown relation " + f->rel +
                                    " for signature " + sig.name);
      if (*ar != f->args.size())
        throw std::invalid_argument("arity mismatch for " + f->rel);
    } else if (f->kind == Fk::Lt) {
      if (!sig.has_relation("<"))
        throw std::invalid_argument("signature " + sig.name + " has no <");
    }
    for (const auto& t : f->args) check_term(t, sig);
    return;
  }
  for (const auto& k : f->kids) check_signature(k, sig);
}

}  // namespace folwb
