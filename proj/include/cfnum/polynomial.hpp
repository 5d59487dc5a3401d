#pragma once

#include <span>
#include <string>
#include <vector>

#include "cfnum/rational.hpp"

namespace cfnum {

/// Dense univariate polynomial over the rationals in the monomial basis.
/// Coefficients ascend by degree and carry no trailing zeros; the zero
/// polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c x^k
  static Polynomial monomial(int k, const Rational& c = 1);
  /// a x + b
  static Polynomial linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Zero beyond the degree.
  Rational coefficient(int k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational eval(const Rational& x0) const;
  Polynomial derivative() const;
  /// (1/l!) (d/dx)^l p evaluated at x0.
  Rational derivative_taylor(const Rational& x0, int l) const;
  /// p(x + y).
  Polynomial shifted(const Rational& y) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Π (x + shifts[i]).
Polynomial product_of_shifts(std::span<const Rational> shifts);

/// Coefficient list "c0,c1,..." with each entry as "p/q".
std::string to_string(const Polynomial& p);

}  // namespace cfnum
