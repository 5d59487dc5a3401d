#include "cfnum/umbral.hpp"

#include <string>

#include "cfnum/errors.hpp"
#include "cfnum/generating_functions.hpp"

namespace cfnum {

namespace {

void require_degree_within(const Polynomial& p, const Series& s, const char* op) {
  if (p.degree() > s.order()) {
    throw UsageError(std::string(op) + ": polynomial degree " + std::to_string(p.degree()) +
                     " exceeds series order " + std::to_string(s.order()));
  }
}

}  // namespace

void ShefferPair::validate() const {
  if (g.order() != f.order()) throw UsageError("sheffer pair: g and f differ in order");
  if (!g.is_invertible()) throw DomainError("sheffer pair: g(t) is not invertible");
  if (!f.is_delta()) throw DomainError("sheffer pair: f(t) is not a delta series");
}

Rational functional_apply(const Series& functional, const Polynomial& p) {
  require_degree_within(p, functional, "functional_apply");
  Rational acc;
  for (int n = 0; n <= p.degree(); ++n) {
    const Rational c = p.coefficient(n);
    if (sgn(c) != 0 && sgn(functional[n]) != 0) acc += functional.egf_coefficient(n) * c;
  }
  return acc;
}

Polynomial apply_operator(const Series& op, const Polynomial& p) {
  require_degree_within(p, op, "apply_operator");
  Polynomial out;
  Polynomial d = p;
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(op[k]) != 0) out += op[k] * d;
    d = d.derivative();
  }
  return out;
}

std::vector<Polynomial> sheffer_polys(const ShefferPair& pair, int n_max) {
  pair.validate();
  if (pair.order() < n_max) {
    throw UsageError("sheffer_polys: order " + std::to_string(pair.order()) + " below n_max " +
                     std::to_string(n_max));
  }
  const Series fbar = comp_inverse(pair.f);
  Series acc = reciprocal(compose(pair.g, fbar));
  // coeffs[n][j] = [x^j] s_n
  std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(n_max) + 1);
  for (int j = 0; j <= n_max; ++j) {
    const Rational inv_jfact = 1 / factorial(j);
    for (int n = j; n <= n_max; ++n) {
      auto& row = coeffs[static_cast<std::size_t>(n)];
      row.resize(static_cast<std::size_t>(n) + 1);
      if (sgn(acc[n]) != 0) row[static_cast<std::size_t>(j)] = acc[n] * factorial(n) * inv_jfact;
    }
    if (j < n_max) acc *= fbar;
  }
  std::vector<Polynomial> out;
  out.reserve(coeffs.size());
  for (auto& row : coeffs) out.emplace_back(std::move(row));
  return out;
}

Polynomial sheffer_recurrence_step(const ShefferPair& pair, const Polynomial& s_n) {
  pair.validate();
  const Series inv_fprime = reciprocal(derivative(pair.f));
  const int m = inv_fprime.order();
  const Series log_deriv = derivative(pair.g) * reciprocal(pair.g.truncated(m));
  const Polynomial q = apply_operator(inv_fprime, s_n);
  return Polynomial::monomial(1) * q - apply_operator(log_deriv, q);
}

Series central_log(const Series& f) {
  if (!f.is_delta()) throw DomainError("central_log: argument is not a delta series");
  return compose(f, central_delta_inverse(f.order()));
}

Series central_exp(const Series& f) {
  if (!f.is_delta()) throw DomainError("central_exp: argument is not a delta series");
  return compose(central_delta(f.order()), comp_inverse(f));
}

}  // namespace cfnum
