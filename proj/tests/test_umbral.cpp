#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfnum/assoc.hpp"
#include "cfnum/bases.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/generating_functions.hpp"
#include "cfnum/sequences.hpp"
#include "cfnum/triangles.hpp"
#include "cfnum/umbral.hpp"

using namespace cfnum;

namespace {

const int kOrder = 22;

Series one_plus_t(int order) { return Series::constant(order, 1) + Series::variable(order); }

std::vector<Rational> q(std::initializer_list<Rational> xs) { return xs; }

// T2(n,k;P) straight from the definition: expand p_n in the central basis.
LowerTriangular t2_oracle(const PolySequenceSpec& spec, int n_max) {
  const auto central = BasisId::of(BasisKind::Central);
  LowerTriangular t(n_max);
  const auto p = spec.polys(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const auto c = from_monomial(p[static_cast<std::size_t>(n)], central);
    for (int k = 0; k < static_cast<int>(c.size()); ++k) t.set(n, k, c[static_cast<std::size_t>(k)]);
  }
  return t;
}

}  // namespace

TEST_CASE("Sheffer polynomials of known pairs") {
  const int N = 8;
  const auto t = Series::variable(N);
  // Bernoulli: g = (e^t - 1)/t, f = t
  const ShefferPair bern{div_by_t(exp_scaled(N + 1, 1) - Rational(1)), t};
  const auto b = sheffer_polys(bern, 4);
  CHECK(b[1] == Polynomial(q({ratio(-1, 2), 1})));
  CHECK(b[2] == Polynomial(q({ratio(1, 6), -1, 1})));
  CHECK(b[3] == Polynomial(q({0, ratio(1, 2), ratio(-3, 2), 1})));
  // Falling factorials: g = 1, f = e^t - 1
  const ShefferPair fall{Series::constant(N, 1), exp_scaled(N, 1) - Rational(1)};
  const auto f = sheffer_polys(fall, 5);
  for (int n = 0; n <= 5; ++n) CHECK(f[static_cast<std::size_t>(n)] == basis_poly(BasisId::of(BasisKind::Falling), n));
}

TEST_CASE("Sheffer recurrence step reproduces the sequence") {
  const int N = 12;
  const ShefferPair lag{Series::constant(N, 1), -(Series::variable(N) * reciprocal(Series::constant(N, 1) - Series::variable(N)))};
  const auto s = sheffer_polys(lag, 8);
  for (int n = 0; n < 8; ++n) CHECK(sheffer_recurrence_step(lag, s[static_cast<std::size_t>(n)]) == s[static_cast<std::size_t>(n + 1)]);
}

TEST_CASE("functional orthogonality <g f^k | s_n> = n! delta") {
  const Params p = default_params();
  for (const char* name : {"bernoulli", "poisson_charlier", "gould_hopper", "degenerate_lah_bell"}) {
    const auto spec = catalog(name, p);
    const auto pair = spec.pair(kOrder);
    const auto s = spec.polys(8);
    Series gfk = pair.g;
    for (int k = 0; k <= 8; ++k) {
      for (int n = 0; n <= 8; ++n) {
        CHECK(functional_apply(gfk, s[static_cast<std::size_t>(n)]) == (n == k ? factorial(n) : Rational(0)));
      }
      gfk = gfk * pair.f;
    }
  }
}

TEST_CASE("catalog sequences are graded with p_0 = 1") {
  for (const auto& e : catalog_entries()) {
    const auto spec = catalog(e.name, default_params());
    const auto p = spec.polys(9);
    for (int n = 0; n <= 9; ++n) CHECK(p[static_cast<std::size_t>(n)].degree() == n);
    CHECK(p[0] == Polynomial::constant(1));
  }
}

TEST_CASE("assoc spot values") {
  const auto bern = catalog("bernoulli", default_params());
  const auto t2 = assoc_t2(bern, 2, T2Route::Explicit);
  CHECK(t2.row(2) == q({ratio(1, 6), -1, 1}));
  const auto prod = catalog("bernoulli_product", default_params());
  const auto t1 = assoc_t1(prod, 2, T1Route::Solve);
  CHECK(t1.row(2) == q({ratio(11, 36), ratio(1, 2), ratio(1, 3)}));
  CHECK(bernoulli_product_t1(2).row(2) == t1.row(2));
  const auto lag = catalog("laguerre", default_params());
  CHECK(assoc_t1(lag, 6, T1Route::GenFunc) == assoc_t1(lag, 6, T1Route::Solve));
}

TEST_CASE("every T2 route equals the definition; every T1 route inverts it") {
  for (const Rational lam : {ratio(1, 3), Rational(1)}) {
    Params p = default_params();
    p["lambda"] = lam;
    for (const auto& e : catalog_entries()) {
      CAPTURE(e.name);
      const auto spec = catalog(e.name, p);
      const int N = 10;
      const auto oracle = t2_oracle(spec, N);
      CHECK(assoc_t2(spec, N, T2Route::Explicit) == oracle);
      CHECK(assoc_t2(spec, N, T2Route::Derivative) == oracle);
      if (spec.is_sheffer()) CHECK(assoc_t2(spec, N, T2Route::GenFunc) == oracle);
      std::vector<LowerTriangular> t1s = {assoc_t1(spec, N, T1Route::Solve)};
      if (spec.is_sheffer()) t1s.push_back(assoc_t1(spec, N, T1Route::Functional));
      if (spec.is_sheffer() && spec.pair(kOrder).g == Series::constant(kOrder, 1)) {
        t1s.push_back(assoc_t1(spec, N, T1Route::GenFunc));
      }
      for (const auto& t1 : t1s) CHECK(multiply(t1, oracle) == LowerTriangular::identity(N));
    }
  }
}

TEST_CASE("bernoulli_product reduction agrees with the defining product") {
  const auto reduced = catalog("bernoulli_product", default_params());
  const auto direct = bernoulli_product_by_definition();
  CHECK(reduced.polys(10) == direct.polys(10));
  CHECK(bernoulli_product_t1(8) == assoc_t1(direct, 8, T1Route::Solve));
}

TEST_CASE("central log and exp are mutually inverse under composition") {
  const int N = 20;
  const Rational lam = ratio(1, 3);
  const auto t = Series::variable(N);
  const std::vector<Series> fs = {
      t,
      (exp_scaled(N, lam) - Rational(1)) / lam,
      Series::constant(N, 1) - exp_scaled(N, -1),
      -(t * reciprocal(Series::constant(N, 1) - t)),
      alpha(N),
  };
  for (const auto& f : fs) {
    CHECK(compose(central_exp(f), central_log(f)) == t);
    CHECK(compose(central_log(f), central_exp(f)) == t);
  }
  CHECK(central_log(t) == central_delta_inverse(N));
  CHECK(central_exp(t) == central_delta(N));
  CHECK(compose(alpha(N), alpha_bar(N)) == t);
  CHECK_THROWS_AS(central_log(one_plus_t(N)), DomainError);
}

TEST_CASE("route restrictions") {
  const auto bern = catalog("bernoulli", default_params());
  CHECK_THROWS_AS(assoc_t1(bern, 4, T1Route::GenFunc), UnsupportedRoute);
  CHECK_THROWS_AS(assoc_t1(bern, 4, T1Route::Matrix), UnsupportedRoute);
  const auto prod = catalog("bernoulli_product", default_params());
  CHECK_THROWS_AS(assoc_t2(prod, 4, T2Route::GenFunc), UnsupportedRoute);
  CHECK_THROWS_AS(assoc_t1(prod, 4, T1Route::Functional), UnsupportedRoute);
  CHECK_THROWS_AS(catalog("hermite", default_params()), UsageError);
  CHECK_THROWS_AS(t2_route_from_key("magic"), UsageError);
}

TEST_CASE("reconstruction detects a corrupted entry") {
  const auto spec = catalog("euler", default_params());
  auto t2 = assoc_t2(spec, 6, T2Route::Explicit);
  CHECK_FALSE(t2_reconstruction_failure(spec, t2).has_value());
  t2.set(4, 2, t2.at(4, 2) + 1);
  CHECK(t2_reconstruction_failure(spec, t2) == 4);
  auto t1 = assoc_t1(spec, 6, T1Route::Solve);
  CHECK_FALSE(t1_reconstruction_failure(spec, t1).has_value());
  t1.set(5, 0, t1.at(5, 0) - 1);
  CHECK(t1_reconstruction_failure(spec, t1) == 5);
}

TEST_CASE("x p_(n-1) transform") {
  const auto bar = PolySequenceSpec::xbar_of(catalog("bernoulli", default_params()));
  CHECK(bar.name() == "bernoulli_xbar");
  const auto p = bar.polys(3);
  CHECK(p[0] == Polynomial::constant(1));
  CHECK(p[1] == Polynomial::monomial(1));
  CHECK(p[2] == Polynomial(q({0, ratio(-1, 2), 1})));
}

TEST_CASE("tlb sequences match their annotated Sheffer pairs") {
  for (const char* name : {"tlb1", "tlb2"}) {
    CAPTURE(name);
    const auto spec = catalog(name, default_params());
    CHECK_FALSE(spec.is_sheffer());
    const auto pair = spec.annotated_pair(kOrder);
    REQUIRE(pair.has_value());
    CHECK(sheffer_polys(*pair, 10) == spec.polys(10));
  }
  CHECK_FALSE(catalog("bernoulli_product", default_params()).annotated_pair(kOrder).has_value());
}
