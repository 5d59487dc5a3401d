#pragma once

#include "cfnum/series.hpp"

// Named series that recur throughout the library. All are exact truncations at
// the requested order.
namespace cfnum {

/// e^(a t).
Series exp_scaled(int order, const Rational& a);

/// l(t) = e^(t/2) - e^(-t/2), the delta series of the central factorials.
Series central_delta(int order);

/// 2 log((t + sqrt(t^2 + 4)) / 2).
Series central_delta_inverse(int order);

/// log(1 + (t/2)(t + sqrt(t^2 + 4))); equal to central_delta_inverse.
Series central_delta_inverse_alt(int order);

/// h(t) = (t + sqrt(t^2 + 4)) / 2, so that h^2 = e^(central_delta_inverse).
Series central_half_root(int order);

/// α(t) = 4t / (4 - t^2).
Series alpha(int order);

/// ᾱ(t) = (2/t)(sqrt(t^2 + 1) - 1).
Series alpha_bar(int order);

/// e_λ^x(t) = (1 + λt)^(x/λ).
Series degenerate_exp(int order, const Rational& lambda, const Rational& x = 1);

/// 1 + c t.
Series linear(int order, const Rational& c);

}  // namespace cfnum
