#pragma once

#include <string>
#include <string_view>

#include "cfnum/lower_triangular.hpp"
#include "cfnum/sequences.hpp"

namespace cfnum {

/// p_n(x) = Σ_k T2(n,k;P) x^[k].
enum class T2Route {
  Explicit,    // Σ_l T2(l,k) [x^l] p_n
  Derivative,  // Σ_l S2(l,k) (1/l!) p_n^(l)(-k/2)
  GenFunc,     // EGF columns of (1/g(f̄)) (e^(f̄/2) - e^(-f̄/2))^k / k!; Sheffer only
};

/// x^[n] = Σ_k T1(n,k;P) p_k(x).
enum class T1Route {
  Functional,  // (1/k!) <g f^k | x^[n]>; Sheffer only
  Solve,       // triangular back-substitution against p_0..p_n; any sequence
  GenFunc,     // EGF columns of (LC_f(t))^k / k!; pairs (1, f) only
  Matrix,      // upper-triangular system in the Bernoulli basis; bernoulli_product only
};

std::string route_key(T2Route r);
std::string route_key(T1Route r);
T2Route t2_route_from_key(std::string_view key);
T1Route t1_route_from_key(std::string_view key);

/// Every route verifies its output by reconstruction and throws CrossCheckError
/// on mismatch. order < 0 selects 2 n_max + 2 for the series-based routes.
LowerTriangular assoc_t2(const PolySequenceSpec& spec, int n_max, T2Route route, int order = -1);
LowerTriangular assoc_t1(const PolySequenceSpec& spec, int n_max, T1Route route, int order = -1);

/// T1(n,k;P) for p_n = Σ B_k(x) B_(n-k)(x), by solving Γ = A S row by row.
LowerTriangular bernoulli_product_t1(int n_max);

/// Σ_k T(n,k) x^[k] for each row, compared to p_n. Returns the first bad n.
std::optional<int> t2_reconstruction_failure(const PolySequenceSpec& spec, const LowerTriangular& t);
/// Σ_k T(n,k) p_k for each row, compared to x^[n]. Returns the first bad n.
std::optional<int> t1_reconstruction_failure(const PolySequenceSpec& spec, const LowerTriangular& t);

}  // namespace cfnum
