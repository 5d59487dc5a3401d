#include "cfnum/polynomial.hpp"

#include <algorithm>

namespace cfnum {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x0) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::derivative_taylor(const Rational& x0, int l) const {
  // (1/l!) p^(l)(x0) = Σ_j C(j, l) c_j x0^(j-l)
  if (l < 0 || l > degree()) return 0;
  Rational acc;
  Rational x_pow(1);
  for (int j = l; j <= degree(); ++j) {
    acc += binomial(j, l) * coeffs_[static_cast<std::size_t>(j)] * x_pow;
    x_pow *= x0;
  }
  return acc;
}

Polynomial Polynomial::shifted(const Rational& y) const {
  std::vector<Rational> out(coeffs_.size());
  for (int l = 0; l <= degree(); ++l) out[static_cast<std::size_t>(l)] = derivative_taylor(y, l);
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial product_of_shifts(std::span<const Rational> shifts) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& s : shifts) {
    // multiply in place by (x + s)
    c.emplace_back(0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] + s * c[k];
    c[0] *= s;
  }
  return Polynomial(std::move(c));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) out += ',';
    out += to_string(p.coefficient(k));
  }
  return out;
}

}  // namespace cfnum
