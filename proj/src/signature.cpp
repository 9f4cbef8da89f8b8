#include "folwb/signature.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace folwb {

bool Signature::has_relation(const std::string& r) const {
  return relation_arity(r).has_value();
}

std::optional<std::uint32_t> Signature::relation_arity(
    const std::string& r) const {
  for (const auto& [n, a] : relations)
    if (n == r) return a;
  return std::nullopt;
}

bool Signature::has_constant(const std::string& c) const {
  for (const auto& n : constants)
    if (n == c) return true;
  return false;
}

bool Signature::has_function(const std::string& f) const {
  for (const auto& [n, a] : functions)
    if (n == f) return true;
  return false;
}

Signature Signature::with_relation(const std::string& r, std::uint32_t arity,
                                   const std::string& new_name) const {
  Signature s = *this;
  s.name = new_name.empty() ? name + "+" + r : new_name;
  s.relations.emplace_back(r, arity);
  s.check_valid();
  return s;
}

Signature Signature::without_relation(const std::string& r,
                                      const std::string& new_name) const {
  Signature s = *this;
  s.name = new_name.empty() ? name + "-" + r : new_name;
  std::erase_if(s.relations, [&](const auto& p) { return p.first == r; });
  return s;
}

void Signature::check_valid() const {
  std::set<std::string> seen;
  auto add = [&](const std::string& n) {
    if (n == "=")
      throw std::invalid_argument("signature lists built-in equality");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate symbol in signature: " + n);
  };
  for (const auto& [n, a] : relations) {
    if (a == 0) throw std::invalid_argument("relation arity must be >= 1");
    add(n);
  }
  for (const auto& n : constants) add(n);
  for (const auto& [n, a] : functions) add(n);
}

const Signature& named_signature(const std::string& name) {
  static const std::map<std::string, Signature> table = [] {
    std::map<std::string, Signature> t;
    auto put = [&](Signature s) {
      s.check_valid();
      t[s.name] = std::move(s);
    };
    put({"w", {{"Z", 1}, {"S", 2}, {"<", 2}}, {}, {}});
    put({"w-surface", {{"<", 2}}, {"0"}, {{"S", 1}}});
    put({"wprime", {{"Z", 1}, {"S", 2}, {"<", 2}, {"E", 1}}, {}, {}});
    put({"wprime-surface", {{"<", 2}, {"E", 1}}, {"0"}, {{"S", 1}}});
    put({"succ0", {{"Z", 1}, {"S", 2}}, {}, {}});
    put({"r", {{"Z", 1}, {"S", 2}, {"A", 3}, {"M", 3}}, {}, {}});
    put({"set", {{"mem", 2}}, {}, {}});
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown signature: " + name);
  return it->second;
}

}  // namespace folwb
