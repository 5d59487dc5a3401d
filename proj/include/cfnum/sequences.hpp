#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfnum/polynomial.hpp"
#include "cfnum/rational.hpp"
#include "cfnum/umbral.hpp"

namespace cfnum {

enum class RuleKind { Sheffer, Direct, Product, XBarOf };

/// A named polynomial sequence p_0, p_1, ... with deg p_n = n and p_0 = 1.
/// Copies share one lazily filled memo of generated polynomials, which is safe
/// to read and extend from several threads.
class PolySequenceSpec {
 public:
  using PairFactory = std::function<ShefferPair(int order)>;
  /// Returns p_0..p_n_max.
  using DirectRule = std::function<std::vector<Polynomial>(int n_max)>;

  static PolySequenceSpec sheffer(std::string name, Params params, PairFactory pair);
  /// `annotated` records a Sheffer pair known to generate the same polynomials;
  /// it is used for cross-checks only, never for generation.
  static PolySequenceSpec direct(std::string name, Params params, DirectRule rule,
                                 PairFactory annotated = {});
  /// p_n = Σ_k b_k b_(n-k).
  static PolySequenceSpec product(std::string name, const PolySequenceSpec& base);
  /// p̄_0 = 1, p̄_n = x p_(n-1).
  static PolySequenceSpec xbar_of(const PolySequenceSpec& inner);

  const std::string& name() const;
  const Params& params() const;
  RuleKind rule() const;

  bool is_sheffer() const { return rule() == RuleKind::Sheffer; }
  /// Throws UnsupportedRoute unless the rule is Sheffer.
  ShefferPair pair(int order) const;
  /// The Sheffer pair, or the annotated one for Direct rules.
  std::optional<ShefferPair> annotated_pair(int order) const;

  Polynomial poly(int n) const;
  std::vector<Polynomial> polys(int n_max) const;

 private:
  struct State;
  explicit PolySequenceSpec(std::shared_ptr<State> state);
  std::shared_ptr<State> state_;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> params;
};

const std::vector<CatalogEntry>& catalog_entries();

/// λ = 1/3, r = 2, s = 1, a = 1/2.
Params default_params();

/// Builds a catalog sequence. Only the parameters the entry uses are kept.
/// Throws UsageError for unknown names or missing parameters and DomainError
/// for λ = 0, r = 0 or a = 0.
PolySequenceSpec catalog(std::string_view name, const Params& params);

/// Bernoulli products p_n = Σ B_k(x) B_(n-k)(x) straight from the definition,
/// independent of the catalog's reduction formula.
PolySequenceSpec bernoulli_product_by_definition();

}  // namespace cfnum
