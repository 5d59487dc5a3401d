#pragma once

#include <vector>

#include "cfnum/polynomial.hpp"
#include "cfnum/series.hpp"

namespace cfnum {

/// s_n(x) ~ (g, f): g invertible, f a delta series.
struct ShefferPair {
  Series g;
  Series f;

  /// Checks the invariants; throws DomainError.
  void validate() const;
  int order() const { return f.order(); }
};

/// <L | p> = Σ_n (n! [t^n] L) [x^n] p. Throws UsageError when deg p exceeds L's order.
Rational functional_apply(const Series& functional, const Polynomial& p);

/// The action of f(t) as a differential operator: Σ_k [t^k]f (d/dx)^k p.
/// Throws UsageError when deg p exceeds f's order.
Polynomial apply_operator(const Series& op, const Polynomial& p);

/// s_0..s_n_max from the expansion of e^(x f̄(t)) / g(f̄(t)). Needs order >= n_max.
std::vector<Polynomial> sheffer_polys(const ShefferPair& pair, int n_max);

/// s_(n+1) = (x - g'/g) (1/f') s_n. Needs deg s_n < order.
Polynomial sheffer_recurrence_step(const ShefferPair& pair, const Polynomial& s_n);

/// LC_f(t) = f(l̄(t)), with l̄ the inverse of l(t) = e^(t/2) - e^(-t/2).
Series central_log(const Series& f);

/// EC_f(t) = l(f̄(t)).
Series central_exp(const Series& f);

}  // namespace cfnum
