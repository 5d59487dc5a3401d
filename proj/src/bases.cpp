#include "cfnum/bases.hpp"

#include <array>
#include <utility>

#include "cfnum/errors.hpp"

namespace cfnum {

namespace {

constexpr std::array<std::pair<BasisKind, std::string_view>, 7> kBasisKeys{{
    {BasisKind::Monomial, "monomial"},
    {BasisKind::Central, "central"},
    {BasisKind::CentralLambda, "central_lambda"},
    {BasisKind::Falling, "falling"},
    {BasisKind::FallingLambda, "falling_lambda"},
    {BasisKind::Rising, "rising"},
    {BasisKind::RisingLambda, "rising_lambda"},
}};

// Roots-as-shifts of the defining product: b_n(x) = Π (x + shift_i).
std::vector<Rational> factor_shifts(const BasisId& b, int n) {
  std::vector<Rational> shifts;
  if (n <= 0) return shifts;
  shifts.reserve(static_cast<std::size_t>(n));
  const Rational& lam = b.lambda;
  switch (b.kind) {
    case BasisKind::Monomial:
      shifts.assign(static_cast<std::size_t>(n), Rational(0));
      break;
    case BasisKind::Central:
    case BasisKind::CentralLambda: {
      const Rational step = b.kind == BasisKind::Central ? Rational(1) : lam;
      shifts.emplace_back(0);
      const Rational top = (ratio(n, 2) - 1) * step;
      for (int i = 0; i <= n - 2; ++i) shifts.push_back(top - i * step);
      break;
    }
    case BasisKind::Falling:
      for (int i = 0; i < n; ++i) shifts.emplace_back(-i);
      break;
    case BasisKind::FallingLambda:
      for (int i = 0; i < n; ++i) shifts.push_back(-i * lam);
      break;
    case BasisKind::Rising:
      for (int i = 0; i < n; ++i) shifts.emplace_back(i);
      break;
    case BasisKind::RisingLambda:
      for (int i = 0; i < n; ++i) shifts.push_back(i * lam);
      break;
  }
  return shifts;
}

}  // namespace

BasisId BasisId::of(BasisKind kind, const Rational& lambda) {
  BasisId b{kind, lambda};
  if (b.has_lambda() && sgn(lambda) == 0) {
    throw DomainError("basis " + basis_key(kind) + " requires lambda != 0");
  }
  if (!b.has_lambda()) b.lambda = 1;
  return b;
}

bool BasisId::has_lambda() const {
  return kind == BasisKind::CentralLambda || kind == BasisKind::FallingLambda ||
         kind == BasisKind::RisingLambda;
}

std::string basis_key(BasisKind kind) {
  for (const auto& [k, key] : kBasisKeys) {
    if (k == kind) return std::string(key);
  }
  return "?";
}

BasisKind basis_from_key(std::string_view key) {
  for (const auto& [k, name] : kBasisKeys) {
    if (name == key) return k;
  }
  throw UsageError("unknown basis '" + std::string(key) + "'");
}

Polynomial basis_poly(const BasisId& b, int n) {
  if (n < 0) throw UsageError("basis_poly: negative degree");
  if (b.has_lambda() && sgn(b.lambda) == 0) throw DomainError("basis_poly: lambda must be nonzero");
  const auto shifts = factor_shifts(b, n);
  return product_of_shifts(shifts);
}

Polynomial to_monomial(std::span<const Rational> coeffs, const BasisId& b) {
  Polynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) != 0) out += coeffs[k] * basis_poly(b, static_cast<int>(k));
  }
  return out;
}

std::vector<Rational> from_monomial(const Polynomial& p, const BasisId& b) {
  // Every supported basis is monic of exact degree n, so peel off the top
  // degree one step at a time.
  std::vector<Rational> out(static_cast<std::size_t>(p.degree() + 1));
  Polynomial rest = p;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = rest.coefficient(k);
    if (sgn(c) == 0) continue;
    out[static_cast<std::size_t>(k)] = c;
    rest -= c * basis_poly(b, k);
  }
  return out;
}

std::vector<Rational> change_basis(std::span<const Rational> coeffs, const BasisId& src,
                                   const BasisId& dst) {
  return from_monomial(to_monomial(coeffs, src), dst);
}

LowerTriangular connection_matrix(const BasisId& src, const BasisId& dst, int n_max) {
  LowerTriangular out(n_max);
  std::vector<Polynomial> dst_polys;
  dst_polys.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) dst_polys.push_back(basis_poly(dst, k));
  for (int n = 0; n <= n_max; ++n) {
    Polynomial rest = basis_poly(src, n);
    for (int k = n; k >= 0; --k) {
      const Rational c = rest.coefficient(k);
      if (sgn(c) == 0) continue;
      out.set(n, k, c);
      rest -= c * dst_polys[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

}  // namespace cfnum
