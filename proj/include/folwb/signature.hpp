#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace folwb {

// Finite relational signature with an optional first-order surface layer
// (the constant 0 and the unary function S). Equality is built in and never
// listed. Relational-normal-form signatures have no constants and no
// functions.
struct Signature {
  std::string name;
  std::vector<std::pair<std::string, std::uint32_t>> relations;
  std::vector<std::string> constants;  // only "0" is ever used
  std::vector<std::pair<std::string, std::uint32_t>> functions;  // only S/1

  bool has_relation(const std::string& r) const;
  std::optional<std::uint32_t> relation_arity(const std::string& r) const;
  bool has_constant(const std::string& c) const;
  bool has_function(const std::string& f) const;
  bool is_relational() const { return constants.empty() && functions.empty(); }

  Signature with_relation(const std::string& r, std::uint32_t arity,
                          const std::string& new_name = "") const;
  Signature without_relation(const std::string& r,
                             const std::string& new_name = "") const;

  void check_valid() const;  // throws on duplicate symbols
};

// Named signatures used throughout:
//   w          relational language of (N;0,S,<): Z/1, S/2, </2
//   w-surface  0, S as a unary function, < as the order
//   wprime / wprime-surface: the above plus E/1 (evenness)
//   succ0      Z/1, S/2
//   r          Z/1, S/2, A/3, M/3
//   set        mem/2 (set membership)
const Signature& named_signature(const std::string& name);

}  // namespace folwb
