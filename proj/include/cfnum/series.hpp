#pragma once

#include <span>
#include <vector>

#include "cfnum/rational.hpp"

namespace cfnum {

/// Formal power series over the rationals, truncated modulo t^(order+1).
///
/// Coefficients are stored in the plain basis (c_n is the coefficient of t^n);
/// the exponential-generating-function view n! c_n is computed on demand.
/// Values are immutable in practice: every operation returns a new series.
class Series {
 public:
  /// The zero series of order 0.
  Series() : coeffs_(1) {}

  /// The zero series of the given order.
  explicit Series(int order);

  /// Pads with zeros or drops coefficients beyond `order`.
  Series(int order, std::vector<Rational> coeffs);

  static Series constant(int order, const Rational& c);
  /// The series t.
  static Series variable(int order);
  static Series monomial(int order, int k, const Rational& c = 1);
  /// Builds Σ a_n t^n / n! from EGF coefficients a_0, a_1, ...
  static Series from_egf(int order, std::span<const Rational> egf);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational egf_coefficient(int n) const;

  /// Smallest n with c_n != 0; order()+1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }
  bool is_delta() const { return order() >= 1 && valuation() == 1; }
  bool is_invertible() const { return sgn(coeffs_[0]) != 0; }

  /// Keeps coefficients up to new_order (which must not exceed order()).
  Series truncated(int new_order) const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& c);
  Series& operator/=(const Rational& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  friend Series operator/(Series a, const Rational& c) { return a /= c; }
  friend Series operator-(Series a);
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(Series a, const Rational& c);
Series operator-(Series a, const Rational& c);

/// f^k by repeated squaring.
Series pow(const Series& f, unsigned k);

/// outer(inner(t)); requires inner to have zero constant term and equal orders.
Series compose(const Series& outer, const Series& inner);

/// f̄ with f̄(f(t)) = f(f̄(t)) = t, by Newton iteration with precision doubling.
Series comp_inverse(const Series& f);

/// 1/f; requires c_0 != 0.
Series reciprocal(const Series& f);

/// The square root with positive constant term; c_0 must be a rational square.
Series sqrt_series(const Series& f);

/// exp(f); requires c_0 = 0.
Series exp_series(const Series& f);

/// log(f); requires c_0 = 1.
Series log_series(const Series& f);

/// f^r via the binomial series; requires c_0 = 1.
Series pow_rational(const Series& f, const Rational& r);

/// (f^λ - 1)/λ; requires c_0 = 1 and λ != 0.
Series degenerate_log(const Series& f, const Rational& lambda);

/// f/t; requires c_0 = 0. The result has order f.order() - 1.
Series div_by_t(const Series& f);

/// d/dt f. The result has order f.order() - 1.
Series derivative(const Series& f);

}  // namespace cfnum
