#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfnum/bases.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/triangles.hpp"

using namespace cfnum;

namespace {

const Params kParams = {{"lambda", ratio(1, 3)}, {"r", 2}, {"s", 1}};

TriangleFamily fam(FamilyId id) { return TriangleFamily::make(id, kParams); }

LowerTriangular tabulate(int n_max, Rational (*f)(int, int)) {
  LowerTriangular t(n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) t.set(n, k, f(n, k));
  return t;
}

// Textbook recurrences, independent of any series machinery.
Rational stirling2(int n, int k) {
  if (n == 0 || k == 0) return (n == 0 && k == 0) ? 1 : 0;
  if (k > n) return 0;
  return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k);
}

Rational stirling1(int n, int k) {
  if (n == 0 || k == 0) return (n == 0 && k == 0) ? 1 : 0;
  if (k > n) return 0;
  return stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k);
}

Rational lah(int n, int k) {
  if (n == 0 || k == 0) return (n == 0 && k == 0) ? 1 : 0;
  return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

LowerTriangular connection(BasisKind src, BasisKind dst, int n_max) {
  return connection_matrix(BasisId::of(src, kParams.at("lambda")), BasisId::of(dst, kParams.at("lambda")), n_max);
}

}  // namespace

TEST_CASE("central factorial spot values on both routes") {
  for (auto route : {0, 1}) {
    const auto t2 = route ? triangle_by_algebra(fam(FamilyId::T2), 6).entries
                          : triangle_by_series(fam(FamilyId::T2), 6).entries;
    const auto t1 = route ? triangle_by_algebra(fam(FamilyId::T1), 6).entries
                          : triangle_by_series(fam(FamilyId::T1), 6).entries;
    CHECK(t2.at(6, 4) == 5);
    CHECK(t2.at(4, 2) == 1);
    CHECK(t2.at(3, 1) == ratio(1, 4));
    CHECK(t1.at(6, 4) == -5);
    CHECK(t1.at(6, 2) == 4);
    // odd n + k vanishes
    CHECK(t2.at(5, 2) == 0);
  }
}

TEST_CASE("Stirling and Lah triangles against their recurrences") {
  const int N = 10;
  CHECK(*classical(FamilyId::S2, N) == tabulate(N, stirling2));
  CHECK(*classical(FamilyId::S1, N) == tabulate(N, stirling1));
  CHECK(*classical(FamilyId::Lah, N) == tabulate(N, lah));
}

TEST_CASE("triangles as connection coefficients between bases") {
  const int N = 9;
  CHECK(*classical(FamilyId::T2, N) == connection(BasisKind::Monomial, BasisKind::Central, N));
  CHECK(*classical(FamilyId::T1, N) == connection(BasisKind::Central, BasisKind::Monomial, N));
  CHECK(*classical(FamilyId::S2, N) == connection(BasisKind::Monomial, BasisKind::Falling, N));
  CHECK(*classical(FamilyId::Lah, N) == connection(BasisKind::Rising, BasisKind::Falling, N));
  CHECK(triangle_by_series(fam(FamilyId::S2Lambda), N).entries ==
        connection(BasisKind::FallingLambda, BasisKind::Falling, N));
  CHECK(triangle_by_series(fam(FamilyId::S1Lambda), N).entries ==
        connection(BasisKind::Falling, BasisKind::FallingLambda, N));
  CHECK(triangle_by_series(fam(FamilyId::T2Lambda), N).entries ==
        connection(BasisKind::FallingLambda, BasisKind::Central, N));
  CHECK(triangle_by_series(fam(FamilyId::T1Lambda), N).entries ==
        connection(BasisKind::Central, BasisKind::FallingLambda, N));
  CHECK(triangle_by_series(fam(FamilyId::R1Lambda), N).entries ==
        connection(BasisKind::CentralLambda, BasisKind::Monomial, N));
  CHECK(triangle_by_series(fam(FamilyId::R2Lambda), N).entries ==
        connection(BasisKind::Monomial, BasisKind::CentralLambda, N));
}

TEST_CASE("Gould-Hopper triangle by finite differences") {
  // T(n,k) = (1/k!) Σ_j C(k,j) (-1)^(k-j) (rj + s)_n
  const int N = 8;
  const Rational r = 2, s = 1;
  const auto t = triangle_by_series(fam(FamilyId::GouldHopper), N).entries;
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= n; ++k) {
      Rational acc;
      for (int j = 0; j <= k; ++j) {
        acc += binomial(k, j) * ((k - j) % 2 ? -1 : 1) * falling_factorial(r * j + s, n);
      }
      CHECK(t.at(n, k) == acc / factorial(k));
    }
  }
}

TEST_CASE("series and algebra routes agree for all families") {
  const int N = 12;
  for (auto id : all_families()) {
    CAPTURE(family_key(id));
    CHECK(triangle_by_series(fam(id), N).entries == triangle_by_algebra(fam(id), N).entries);
  }
}

TEST_CASE("lambda = 1 collapses") {
  const Params one = {{"lambda", 1}};
  const int N = 8;
  // e_1(t) - 1 = t, so S2 at lambda = 1 is the identity.
  CHECK(triangle_by_series(TriangleFamily::make(FamilyId::S2Lambda, one), N).entries == LowerTriangular::identity(N));
  CHECK(triangle_by_series(TriangleFamily::make(FamilyId::S1Lambda, one), N).entries == LowerTriangular::identity(N));
}

TEST_CASE("number sequences") {
  const auto B = number_sequence(NumberSequenceId::Bernoulli, 12);
  // Σ_(j<=n) C(n+1,j) B_j = 0 for n >= 1
  CHECK(B[0] == 1);
  for (int n = 1; n <= 11; ++n) {
    Rational acc;
    for (int j = 0; j <= n; ++j) acc += binomial(n + 1, j) * B[static_cast<std::size_t>(j)];
    CHECK(acc == 0);
  }
  CHECK(B[12] == Rational(-691, 2730));
  const auto E = number_sequence(NumberSequenceId::Euler, 5);
  CHECK(E[1] == ratio(-1, 2));
  CHECK(E[2] == 0);
  CHECK(E[3] == ratio(1, 4));
  const auto bel = number_sequence(NumberSequenceId::Bell, 6);
  CHECK(bel == std::vector<Rational>{1, 1, 2, 5, 15, 52, 203});
  const auto b2 = number_sequence(NumberSequenceId::Bernoulli2nd, 4);
  CHECK(b2 == std::vector<Rational>{1, ratio(1, 2), ratio(-1, 6), ratio(1, 4), ratio(-19, 30)});
}

TEST_CASE("family construction errors") {
  CHECK_THROWS_AS(TriangleFamily::make(FamilyId::S2Lambda, {}), UsageError);
  CHECK_THROWS_AS(TriangleFamily::make(FamilyId::S2Lambda, {{"lambda", 0}}), DomainError);
  CHECK_THROWS_AS(TriangleFamily::make(FamilyId::GouldHopper, {{"r", 0}, {"s", 1}}), DomainError);
  CHECK_THROWS_AS(family_from_key("zz"), UsageError);
  CHECK(family_from_key("t2l") == FamilyId::T2Lambda);
}
