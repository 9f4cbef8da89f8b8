#include "folwb/eval.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace folwb {

namespace {

struct Evaluator {
  const Nat& bound;
  // memo per quantifier node: key is the node plus the values of its free
  // variables; pays off when the same subformula is re-entered across outer
  // loops
  std::unordered_map<const Formula*, std::vector<VarId>> fv_cache;
  std::unordered_map<std::string, bool> memo;

  const std::vector<VarId>& fv_of(const Formula* f, const FormulaRef& ref) {
    auto it = fv_cache.find(f);
    if (it != fv_cache.end()) return it->second;
    auto s = free_vars(ref);
    return fv_cache.emplace(f, std::vector<VarId>(s.begin(), s.end()))
        .first->second;
  }

  Nat value(const Term& t, const Assignment& env) const {
    if (t.base == Term::Base::Zero) return t.offset;
    auto it = env.find(t.var);
    if (it == env.end())
      throw std::invalid_argument("bounded_eval: uncovered variable x" +
                                  std::to_string(t.var));
    return it->second + t.offset;
  }

  bool atom(const FormulaRef& f, const Assignment& env) const {
    switch (f->kind) {
      case Fk::Eq: return value(f->args[0], env) == value(f->args[1], env);
      case Fk::Lt: return value(f->args[0], env) < value(f->args[1], env);
      default: break;
    }
    if (f->rel == "Z") return value(f->args[0], env) == 0;
    if (f->rel == "S")
      return value(f->args[0], env) + 1 == value(f->args[1], env);
    if (f->rel == "E") return (value(f->args[0], env) & 1) == 0;
    throw std::invalid_argument("bounded_eval: relation '" + f->rel +
                                "' has no standard-model meaning");
  }

  bool eval(const FormulaRef& f, Assignment& env) {
    switch (f->kind) {
      case Fk::Atom:
      case Fk::Eq:
      case Fk::Lt:
        return atom(f, env);
      case Fk::Not: return !eval(f->kids[0], env);
      case Fk::And: return eval(f->kids[0], env) && eval(f->kids[1], env);
      case Fk::Or: return eval(f->kids[0], env) || eval(f->kids[1], env);
      case Fk::Implies:
        return !eval(f->kids[0], env) || eval(f->kids[1], env);
      case Fk::Iff: return eval(f->kids[0], env) == eval(f->kids[1], env);
      case Fk::Exists:
      case Fk::Forall: {
        std::string key;
        key.reserve(32);
        key += std::to_string(
            reinterpret_cast<std::uintptr_t>(f.get()));
        for (VarId v : fv_of(f.get(), f)) {
          key += ',';
          key += value(Term::variable(v), env).str();
        }
        auto hit = memo.find(key);
        if (hit != memo.end()) return hit->second;

        bool ex = f->kind == Fk::Exists;
        bool res = !ex;
        auto saved = env.find(f->qvar) != env.end()
                         ? std::optional<Nat>(env[f->qvar])
                         : std::nullopt;
        for (Nat i = 0; i <= bound; ++i) {
          env[f->qvar] = i;
          bool b = eval(f->kids[0], env);
          if (b == ex) {
            res = ex;
            break;
          }
        }
        if (saved)
          env[f->qvar] = *saved;
        else
          env.erase(f->qvar);
        memo.emplace(std::move(key), res);
        return res;
      }
    }
    throw std::logic_error("bounded_eval: unreachable");
  }
};

}  // namespace

bool bounded_eval(const FormulaRef& f, const Nat& bound,
                  const Assignment& assignment) {
  for (VarId v : free_vars(f))
    if (!assignment.count(v))
      throw std::invalid_argument("bounded_eval: uncovered variable x" +
                                  std::to_string(v));
  Evaluator ev{bound, {}, {}};
  Assignment env = assignment;
  return ev.eval(f, env);
}

std::optional<bool> stable_bounded_eval(const FormulaRef& f, const Nat& bound,
                                        const Assignment& assignment) {
  bool a = bounded_eval(f, bound, assignment);
  bool b = bounded_eval(f, bound * 2, assignment);
  if (a != b) return std::nullopt;
  return a;
}

Nat oracle_bound(const FormulaRef& f) {
  Nat b = max_constant(f) + (Nat(1) << (quantifier_rank(f) + 2));
  return b < 4 ? Nat(4) : b;
}

}  // namespace folwb
