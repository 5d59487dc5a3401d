#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cfnum/lower_triangular.hpp"
#include "cfnum/polynomial.hpp"

namespace cfnum {

enum class BasisKind {
  Monomial,
  Central,        // x^[n] = x (x + n/2 - 1)_(n-1)
  CentralLambda,  // x^[n,λ] = x (x + (n/2 - 1)λ)_(n-1,λ)
  Falling,        // (x)_n
  FallingLambda,  // (x)_(n,λ)
  Rising,         // <x>_n
  RisingLambda,   // <x>_(n,λ)
};

struct BasisId {
  BasisKind kind = BasisKind::Monomial;
  /// Used only by the λ-variants; must be nonzero there.
  Rational lambda = 1;

  static BasisId of(BasisKind kind, const Rational& lambda = 1);
  bool has_lambda() const;
  friend bool operator==(const BasisId&, const BasisId&) = default;
};

/// CLI key: monomial, central, central_lambda, falling, falling_lambda, rising, rising_lambda.
std::string basis_key(BasisKind kind);
BasisKind basis_from_key(std::string_view key);

/// The n-th basis polynomial, expanded from its linear-factor product.
Polynomial basis_poly(const BasisId& b, int n);

/// Σ_k coeffs[k] b_k(x) as a monomial polynomial.
Polynomial to_monomial(std::span<const Rational> coeffs, const BasisId& b);

/// Coordinates of p in basis b (length degree + 1; empty for p = 0).
std::vector<Rational> from_monomial(const Polynomial& p, const BasisId& b);

/// Re-expresses coordinates in src as coordinates in dst, trailing zeros trimmed.
std::vector<Rational> change_basis(std::span<const Rational> coeffs, const BasisId& src,
                                   const BasisId& dst);

/// Row n holds the coordinates of src_n in dst, for n <= n_max.
LowerTriangular connection_matrix(const BasisId& src, const BasisId& dst, int n_max);

}  // namespace cfnum
