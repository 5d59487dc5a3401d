#include "cfnum/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cfnum/errors.hpp"

namespace cfnum {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

// Same coefficients at a larger order, with zeros appended. Internal only: the
// new coefficients are not meaningful, callers guarantee they never matter.
Series padded(const Series& f, int order) {
  std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
  return Series(order, std::move(c));
}

}  // namespace

Series::Series(int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::constant(int order, const Rational& c) {
  Series out(order);
  out.coeffs_[0] = c;
  return out;
}

Series Series::variable(int order) { return monomial(order, 1); }

Series Series::monomial(int order, int k, const Rational& c) {
  Series out(order);
  if (k >= 0 && k <= order) out.coeffs_[static_cast<std::size_t>(k)] = c;
  return out;
}

Series Series::from_egf(int order, std::span<const Rational> egf) {
  Series out(order);
  Rational inv_fact(1);
  for (int n = 0; n <= order && n < static_cast<int>(egf.size()); ++n) {
    if (n > 0) inv_fact /= n;
    out.coeffs_[static_cast<std::size_t>(n)] = egf[static_cast<std::size_t>(n)] * inv_fact;
  }
  return out;
}

Rational Series::egf_coefficient(int n) const {
  if (n < 0 || n > order()) {
    throw UsageError("egf_coefficient: index " + std::to_string(n) + " beyond order " +
                     std::to_string(order()));
  }
  return (*this)[n] * factorial(n);
}

int Series::valuation() const {
  for (int n = 0; n <= order(); ++n) {
    if (sgn((*this)[n]) != 0) return n;
  }
  return order() + 1;
}

Series Series::truncated(int new_order) const {
  if (new_order > order()) {
    throw UsageError("truncated: cannot raise order " + std::to_string(order()) + " to " +
                     std::to_string(new_order));
  }
  return Series(new_order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(*this, rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(*this, rhs, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Series& rhs) { return *this = *this * rhs; }

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series& Series::operator/=(const Rational& c) {
  if (sgn(c) == 0) throw DomainError("series divided by zero scalar");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  const int n = a.order();
  Series out(n);
  Rational term;
  for (int i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      term = a[i] * b[j];
      out.coeffs_[static_cast<std::size_t>(i + j)] += term;
    }
  }
  return out;
}

Series operator-(Series a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

Series operator+(Series a, const Rational& c) { return a += Series::constant(a.order(), c); }
Series operator-(Series a, const Rational& c) { return a -= Series::constant(a.order(), c); }

Series pow(const Series& f, unsigned k) {
  Series out = Series::constant(f.order(), 1);
  Series base = f;
  while (k != 0) {
    if (k & 1U) out *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return out;
}

Series compose(const Series& outer, const Series& inner) {
  require_same_order(outer, inner, "compose");
  if (sgn(inner[0]) != 0) {
    throw DomainError("compose: inner series must have zero constant term");
  }
  const int n = outer.order();
  // Horner in the inner series; multiplications by a series of valuation >= 1
  // shift everything up, so each step only touches the live coefficients.
  Series out = Series::constant(n, outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    out = out * inner + outer[k];
  }
  return out;
}

Series comp_inverse(const Series& f) {
  if (f.order() < 1 || !f.is_delta()) {
    throw DomainError("comp_inverse: argument is not a delta series");
  }
  const int n = f.order();
  const Series fprime = n >= 2 ? derivative(f) : Series();
  Series g = Series::monomial(1, 1, 1 / f[1]);
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    const Series g_work = padded(g, prec);
    const Series residual = compose(f.truncated(prec), g_work) - Series::variable(prec);
    const Series df = fprime.order() >= prec ? fprime.truncated(prec) : padded(fprime, prec);
    g = g_work - residual * reciprocal(compose(df, g_work));
  }
  return g;
}

Series reciprocal(const Series& f) {
  if (!f.is_invertible()) throw DomainError("reciprocal: constant term is zero");
  const int n = f.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  const Rational b0 = 1 / f[0];
  b[0] = b0;
  Rational acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (sgn(f[j]) != 0) acc += f[j] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -b0 * acc;
  }
  return Series(n, std::move(b));
}

Series sqrt_series(const Series& f) {
  const auto root = exact_sqrt(f[0]);
  if (!root || sgn(*root) == 0) {
    throw DomainError("sqrt_series: constant term " + to_string(f[0]) +
                      " is not a nonzero rational square");
  }
  const int n = f.order();
  std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
  s[0] = *root;
  const Rational inv_two_s0 = 1 / (2 * *root);
  Rational acc;
  for (int k = 1; k <= n; ++k) {
    acc = f[k];
    for (int j = 1; j < k; ++j) acc -= s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc * inv_two_s0;
  }
  return Series(n, std::move(s));
}

Series exp_series(const Series& f) {
  if (sgn(f[0]) != 0) throw DomainError("exp_series: constant term must be zero");
  const int n = f.order();
  std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  Rational acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (sgn(f[j]) != 0) acc += j * f[j] * e[static_cast<std::size_t>(k - j)];
    }
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  return Series(n, std::move(e));
}

Series log_series(const Series& f) {
  if (f[0] != 1) throw DomainError("log_series: constant term must be 1");
  const int n = f.order();
  std::vector<Rational> l(static_cast<std::size_t>(n) + 1);
  Rational acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j < k; ++j) {
      if (sgn(f[k - j]) != 0) acc += j * l[static_cast<std::size_t>(j)] * f[k - j];
    }
    l[static_cast<std::size_t>(k)] = f[k] - acc / k;
  }
  return Series(n, std::move(l));
}

Series pow_rational(const Series& f, const Rational& r) {
  if (f[0] != 1) throw DomainError("pow_rational: constant term must be 1");
  const int n = f.order();
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  const Rational r1 = r + 1;
  Rational acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (sgn(f[j]) != 0) acc += (r1 * j - k) * f[j] * p[static_cast<std::size_t>(k - j)];
    }
    p[static_cast<std::size_t>(k)] = acc / k;
  }
  return Series(n, std::move(p));
}

Series degenerate_log(const Series& f, const Rational& lambda) {
  if (sgn(lambda) == 0) {
    throw DomainError("degenerate_log: lambda = 0 (use log_series for the limit)");
  }
  return (pow_rational(f, lambda) - Rational(1)) / lambda;
}

Series div_by_t(const Series& f) {
  if (f.order() < 1) throw UsageError("div_by_t: order must be at least 1");
  if (sgn(f[0]) != 0) throw DomainError("div_by_t: constant term must be zero");
  std::vector<Rational> c(f.coefficients().begin() + 1, f.coefficients().end());
  return Series(f.order() - 1, std::move(c));
}

Series derivative(const Series& f) {
  if (f.order() < 1) throw UsageError("derivative: order must be at least 1");
  std::vector<Rational> c(static_cast<std::size_t>(f.order()));
  for (int k = 1; k <= f.order(); ++k) c[static_cast<std::size_t>(k - 1)] = k * f[k];
  return Series(f.order() - 1, std::move(c));
}

}  // namespace cfnum
