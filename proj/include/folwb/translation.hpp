#pragma once

#include <optional>
#include <map>
#include <string>
#include <vector>

#include "folwb/formula.hpp"
#include "folwb/signature.hpp"

namespace folwb {

// One relativization layer of a k-dimensional domain. Translating a source
// quantifier emits, for each layer in order, `width` target quantifiers
// followed by the layer's guard (if any) as a conjunct (existential) or
// antecedent chain element (universal). Composition concatenates expanded
// layer lists, which is exactly what makes one-shot application coincide,
// node for node, with sequential application.
struct DeltaLayer {
  std::uint32_t width = 0;        // zero-width layers are pure guards
  FormulaRef guard;               // null = unrelativized
};

// A k-dimensional translation between relational signatures, possibly
// reinterpreting equality. Per-symbol formulas for a relation of arity a use
// variables x0..x_{a*k-1}, argument j occupying x_{j*k}..x_{j*k+k-1};
// guards of layer i use the tuple coordinates covered so far.
struct Translation {
  std::string name;
  Signature source;
  Signature target;
  std::uint32_t dim = 1;
  std::vector<DeltaLayer> layers;                 // widths sum to dim
  std::map<std::string, FormulaRef> symbol_map;   // "<" keys the order atom
  FormulaRef equality;                            // null = coordinatewise
  bool fujimoto = false;  // identity-preserving, unrelativized on source

  // Closed-form handling of offset atoms that cannot be unfolded (numeral
  // constraints whose offsets are astronomically large).
  enum class OffsetHook { None, PairDoubling };
  OffsetHook hook = OffsetHook::None;

  // The domain formula on tuple variables base..base+dim-1 (conjunction of
  // all guards); null when fully unrelativized.
  FormulaRef delta(VarId base) const;
};

struct Interpretation {
  Translation translation;
  std::string source_theory;
  std::string target_theory;
};

// Applies tau to a formula over tau.source. Source variable i becomes the
// tuple i*dim..i*dim+dim-1; quantifiers are relativized layer by layer;
// atoms are replaced by their per-symbol formulas with tuple substitution;
// equality atoms use the equality formula when present and coordinatewise
// equality otherwise. Inputs with dim > 1 are normalized first; offset atoms
// are routed through the hook when one is registered, and unfolded when the
// offsets are small.
FormulaRef translate(const Translation& tau, const FormulaRef& f);

// Composition: source of sigma to target of tau, dimension product.
// translate(compose(sigma,tau), f) is AST-equal (after bound-variable
// normalization) to translate(tau, translate(sigma, f)).
Translation compose(const Translation& sigma, const Translation& tau);

// The case-split combinator: behaves as K where the target sentence holds
// and as M where it fails. K and M must share signatures; differing
// dimensions are padded by duplicating the last coordinate.
Translation disjunctive(const Translation& K, const FormulaRef& sentence,
                        const Translation& M);

// Identity translation on a relational signature.
Translation identity_translation(const Signature& sig);

// Named translations:
//   iota            two-dimensional pair coding of (N;0,S,<,E) into (N;0,S,<)
//   kappa           Fujimoto T/1 -> E over the W-vocabulary
//   nu_restriction  iota restricted to the language without E (W into W)
//   rho_appA        cardinal-arithmetic coding of the R-language into sets
const Translation& builtin_translation(const std::string& name);

// Pads a translation to a higher dimension by duplicating the last
// coordinate under an equality guard.
Translation pad_to_dimension(const Translation& t, std::uint32_t dim);

// Text format: one "symbol: formula" line per entry, mirroring the builtin
// definitions. Round-trips through load_translation.
std::string save_translation(const Translation& t);
Translation load_translation(const std::string& text);

}  // namespace folwb
