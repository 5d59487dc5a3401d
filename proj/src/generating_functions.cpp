#include "cfnum/generating_functions.hpp"

#include "cfnum/errors.hpp"

namespace cfnum {

namespace {

// sqrt(c^2 t^2 + 4)
Series sqrt_shifted_square(int order, const Rational& c) {
  Series s = Series::constant(order, 4);
  s += Series::monomial(order, 2, c * c);
  return sqrt_series(s);
}

}  // namespace

Series exp_scaled(int order, const Rational& a) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational term(1);
  for (int n = 0; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = term;
    term *= a;
    term /= n + 1;
  }
  return Series(order, std::move(c));
}

Series central_delta(int order) {
  return exp_scaled(order, Rational(1, 2)) - exp_scaled(order, Rational(-1, 2));
}

Series central_half_root(int order) {
  return (Series::variable(order) + sqrt_shifted_square(order, 1)) / 2;
}

Series central_delta_inverse(int order) { return 2 * log_series(central_half_root(order)); }

Series central_delta_inverse_alt(int order) {
  const Series t = Series::variable(order);
  return log_series(t * (t + sqrt_shifted_square(order, 1)) / 2 + Rational(1));
}

Series alpha(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational coeff(1);
  for (int n = 1; 2 * n - 1 <= order; ++n) {
    c[static_cast<std::size_t>(2 * n - 1)] = coeff;
    coeff /= 4;
  }
  return Series(order, std::move(c));
}

Series alpha_bar(int order) {
  Series radicand = Series::constant(order + 1, 1) + Series::monomial(order + 1, 2);
  return 2 * div_by_t(sqrt_series(radicand) - Rational(1));
}

Series degenerate_exp(int order, const Rational& lambda, const Rational& x) {
  if (sgn(lambda) == 0) throw DomainError("degenerate_exp: lambda must be nonzero");
  return pow_rational(linear(order, lambda), x / lambda);
}

Series linear(int order, const Rational& c) {
  return Series::constant(order, 1) + Series::monomial(order, 1, c);
}

}  // namespace cfnum
