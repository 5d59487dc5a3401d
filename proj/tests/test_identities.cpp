#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cfnum/assoc.hpp"
#include "cfnum/closed_forms.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/identities.hpp"
#include "cfnum/report.hpp"
#include "cfnum/triangles.hpp"

using namespace cfnum;

namespace {

PolySequenceSpec seq(const char* name) { return catalog(name, default_params()); }

}  // namespace

TEST_CASE("orthogonality") {
  CHECK(check_orthogonality(seq("monomials"), 6).passed());
  CHECK(check_orthogonality(seq("laguerre"), 8).passed());

  const auto spec = seq("bell");
  auto t2 = assoc_t2(spec, 7, T2Route::Explicit);
  const auto t1 = assoc_t1(spec, 7, T1Route::Solve);
  t2.set(5, 3, t2.at(5, 3) + 1);
  const auto c = check_orthogonality(t1, t2, "bell");
  REQUIRE_FALSE(c.passed());
  CHECK(c.witness->n == 5);
  CHECK(c.witness->k == 3);
  CHECK(c.witness->lhs == 1);
  CHECK(c.witness->rhs == 0);
}

TEST_CASE("inverse relations round trip") {
  CHECK(check_inverse_relations(seq("monomials"), 10, 100, 1).passed());
  CHECK(check_inverse_relations(seq("rising"), 10, 100, 2).passed());
  CHECK(check_inverse_relations(seq("bernoulli_product"), 8, 20, 3).passed());
}

TEST_CASE("closed forms") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    const auto spec = seq(e.name.c_str());
    CHECK_FALSE(closed_forms_t2(spec, 4).empty());
    CHECK_FALSE(closed_forms_t1(spec, 4).empty());
    CHECK(check_closed_forms(spec, 8).passed());
  }
  CHECK(check_tl_compositions(8).passed());

  // Bell: Σ_l S2(n,l) T2(l,k)
  const auto s2 = classical(FamilyId::S2, 8);
  const auto t2 = classical(FamilyId::T2, 8);
  CHECK(multiply(*s2, *t2) == assoc_t2(seq("bell"), 8, T2Route::Explicit));
}

TEST_CASE("fully degenerate Bell: the S1(l,m) variant does not invert") {
  for (const Rational lam : {ratio(1, 3), Rational(1)}) {
    Params p = default_params();
    p["lambda"] = lam;
    const auto spec = catalog("fully_degenerate_bell", p);
    const auto t1 = assoc_t1(spec, 6, T1Route::Solve);
    CHECK(closed_forms_t1(spec, 6).front().table == t1);
    CHECK_FALSE(fully_degenerate_bell_t1_with_s1(lam, 6) == t1);
  }
}

TEST_CASE("recurrences through x p_(n-1) as stated do not hold") {
  // Monomials are fixed by the transform, so the first-kind statement reads
  // T2(2,1) = T2(1,0) + (1/2) T2(1,1), i.e. 0 = 1/2.
  const auto c = check_recurrences(seq("monomials"), 8);
  REQUIRE_FALSE(c.passed());
  CHECK(c.witness->n == 2);
  CHECK(c.witness->k == 1);
  CHECK(c.witness->lhs == 0);
  CHECK(c.witness->rhs == ratio(1, 2));

  // T1(3,1) = T1(2,0) - T1(2,1) would need -1/4 = 0.
  const auto t1 = classical(FamilyId::T1, 4);
  CHECK(t1->at(3, 1) == ratio(-1, 4));
  CHECK(t1->at(2, 0) - ratio(2, 2) * t1->at(2, 1) == 0);

  // The k = 0 boundary does hold: xp_n vanishes at 0.
  for (const char* name : {"monomials", "bernoulli", "rising"}) {
    const auto bar = PolySequenceSpec::xbar_of(seq(name));
    const auto t2 = assoc_t2(bar, 8, T2Route::Explicit);
    for (int n = 1; n <= 8; ++n) CHECK(t2.at(n, 0) == 0);
  }

  // What does hold for the central factorials: the step-two recurrence.
  const auto T2 = classical(FamilyId::T2, 10);
  for (int n = 2; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) CHECK(T2->at(n, k) == T2->at(n - 2, k - 2) + ratio(k * k, 4) * T2->at(n - 2, k));
}

TEST_CASE("sum rule") {
  for (const auto& e : catalog_entries()) CHECK(check_sum_rule(seq(e.name.c_str()), 10).passed());
  const auto t1 = assoc_t1(seq("gould_hopper"), 3, T1Route::Solve);
  const auto p = seq("gould_hopper").polys(3);
  Rational s;
  for (int k = 0; k <= 3; ++k) s += t1.at(3, k) * p[static_cast<std::size_t>(k)].eval(1);
  CHECK(s == ratio(3, 4));
}

TEST_CASE("routes and quadruple sums") {
  for (const auto& e : catalog_entries()) CHECK(check_routes(seq(e.name.c_str()), 8).passed());
  const auto quads = check_quadruple_sums(default_params(), 6, 5);
  CHECK(quads.size() == 5);
  for (const auto& c : quads) {
    CAPTURE(c.sequence);
    CHECK(c.passed());
  }
}

TEST_CASE("suite runner") {
  SuiteOptions none;
  none.checks = parse_suite_filter("none");
  const auto empty = run_suite(none);
  CHECK(empty.checks.empty());
  CHECK(empty.all_pass());

  SuiteOptions opts;
  opts.checks = parse_suite_filter("orthogonality,sum_rule,quadruple_sums");
  opts.n_max = 6;
  opts.seed = 9;
  const auto serial = report_json(run_suite(opts));
  opts.jobs = 4;
  const auto parallel = report_json(run_suite(opts));
  CHECK(serial == parallel);

  const auto j = nlohmann::json::parse(serial);
  CHECK(j["suite_version"] == kSuiteVersion);
  CHECK(j["all_pass"] == true);
  CHECK(j["params"]["lambda"] == "1/3");
  CHECK(j["checks"][0]["id"] == "orthogonality");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("witness"));

  CHECK_THROWS_AS(parse_suite_filter("orthogonality,bogus"), UsageError);
  CHECK(parse_suite_filter("sum_rule,orthogonality") == std::vector<std::string>{"orthogonality", "sum_rule"});
}
