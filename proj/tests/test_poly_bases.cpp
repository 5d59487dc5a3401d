#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfnum/bases.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/polynomial.hpp"
#include "cfnum/triangles.hpp"
#include "gen.hpp"

using namespace cfnum;

namespace {

const Rational kLambda = ratio(1, 3);

// Expands Π (x + r_i) one linear factor at a time.
Polynomial expand(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p = p * Polynomial::linear(1, r);
  return p;
}

Polynomial oracle(BasisKind kind, int n, const Rational& lam) {
  std::vector<Rational> shifts;
  switch (kind) {
    case BasisKind::Monomial:
      shifts.assign(static_cast<std::size_t>(n), 0);
      break;
    case BasisKind::Falling:
      for (int i = 0; i < n; ++i) shifts.push_back(-i);
      break;
    case BasisKind::FallingLambda:
      for (int i = 0; i < n; ++i) shifts.push_back(-i * lam);
      break;
    case BasisKind::Rising:
      for (int i = 0; i < n; ++i) shifts.push_back(i);
      break;
    case BasisKind::RisingLambda:
      for (int i = 0; i < n; ++i) shifts.push_back(i * lam);
      break;
    case BasisKind::Central:
      if (n > 0) shifts.push_back(0);
      for (int i = 0; i < n - 1; ++i) shifts.push_back(ratio(n, 2) - 1 - i);
      break;
    case BasisKind::CentralLambda:
      if (n > 0) shifts.push_back(0);
      for (int i = 0; i < n - 1; ++i) shifts.push_back((ratio(n, 2) - 1) * lam - i * lam);
      break;
  }
  return expand(shifts);
}

const std::vector<BasisKind> kAll = {BasisKind::Monomial,      BasisKind::Central, BasisKind::CentralLambda,
                                     BasisKind::Falling,       BasisKind::FallingLambda,
                                     BasisKind::Rising,        BasisKind::RisingLambda};

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto p = Polynomial::linear(1, 2) * Polynomial::linear(1, -2);  // x^2 - 4
  CHECK(p == Polynomial(q({-4, 0, 1})));
  CHECK(p.eval(3) == 5);
  CHECK(p.derivative() == Polynomial::monomial(1, 2));
  CHECK(p.shifted(1) == Polynomial(q({-3, 2, 1})));
  CHECK(Polynomial(q({1, 0, 0})).degree() == 0);
  CHECK(Polynomial().degree() == -1);
  CHECK(to_string(Polynomial(std::vector<Rational>{Rational(1, 2), -1})) == "1/2,-1");
}

TEST_CASE("derivative_taylor reads the coefficients of the shifted polynomial") {
  gen::Source src(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = src.polynomial(static_cast<int>(src.integer(0, 7)));
    const Rational x0 = src.rational();
    const auto moved = p.shifted(x0);
    for (int l = 0; l <= p.degree() + 1; ++l) CHECK(p.derivative_taylor(x0, l) == moved.coefficient(l));
  }
}

TEST_CASE("basis polynomials match direct expansion of their factors") {
  for (auto kind : kAll) {
    const auto b = BasisId::of(kind, kLambda);
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(basis_key(kind));
      CAPTURE(n);
      CHECK(basis_poly(b, n) == oracle(kind, n, kLambda));
    }
  }
}

TEST_CASE("central factorial spot values") {
  const auto central = BasisId::of(BasisKind::Central);
  const auto mono = BasisId::of(BasisKind::Monomial);
  CHECK(change_basis(q({0, 0, 0, 1}), mono, central) == std::vector<Rational>{0, Rational(1, 4), 0, 1});
  CHECK(change_basis(q({0, 0, 0, 0, 0, 0, 1}), central, mono) == q({0, 0, 4, 0, -5, 0, 1}));
  CHECK(basis_poly(central, 2) == Polynomial::monomial(2));
}

TEST_CASE("round trips between every pair of bases") {
  gen::Source src(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = src.polynomial(static_cast<int>(src.integer(0, 7)));
    for (auto a : kAll) {
      for (auto b : kAll) {
        const auto A = BasisId::of(a, kLambda);
        const auto B = BasisId::of(b, kLambda);
        const auto in_a = from_monomial(p, A);
        const auto in_b = change_basis(in_a, A, B);
        CHECK(to_monomial(in_b, B) == p);
        CHECK(change_basis(in_b, B, A) == in_a);
      }
    }
  }
}

TEST_CASE("connection matrices are inverse pairs and reproduce the central factorial triangles") {
  const int N = 10;
  const auto mono = BasisId::of(BasisKind::Monomial);
  const auto central = BasisId::of(BasisKind::Central);
  const auto forward = connection_matrix(mono, central, N);
  const auto backward = connection_matrix(central, mono, N);
  CHECK(multiply(forward, backward) == LowerTriangular::identity(N));
  CHECK(forward == *classical(FamilyId::T2, N));
  CHECK(backward == *classical(FamilyId::T1, N));
  CHECK(forward.at(6, 4) == 5);
  CHECK(backward.at(6, 4) == -5);
}

TEST_CASE("lambda bases need a nonzero lambda") {
  CHECK_THROWS_AS(BasisId::of(BasisKind::FallingLambda, 0), DomainError);
  CHECK_THROWS_AS(basis_from_key("chebyshev"), UsageError);
}
