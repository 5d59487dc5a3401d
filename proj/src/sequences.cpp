#include "cfnum/sequences.hpp"

#include <mutex>
#include <utility>

#include "cfnum/errors.hpp"
#include "cfnum/generating_functions.hpp"
#include "cfnum/triangles.hpp"

namespace cfnum {

struct PolySequenceSpec::State {
  std::string name;
  Params params;
  RuleKind rule = RuleKind::Sheffer;
  PairFactory pair;
  DirectRule direct;
  PairFactory annotated;
  std::shared_ptr<State> inner;

  std::mutex memo_mutex;
  std::vector<Polynomial> memo;
};

namespace {

std::vector<Polynomial> generate(const PolySequenceSpec& spec, const PolySequenceSpec::PairFactory& pair,
                                 const PolySequenceSpec::DirectRule& direct, RuleKind rule,
                                 const std::optional<PolySequenceSpec>& inner, int n_max) {
  std::vector<Polynomial> out;
  switch (rule) {
    case RuleKind::Sheffer:
      out = sheffer_polys(pair(std::max(n_max, 1)), n_max);
      break;
    case RuleKind::Direct:
      out = direct(n_max);
      out.resize(static_cast<std::size_t>(n_max) + 1);
      break;
    case RuleKind::Product: {
      const auto base = inner->polys(n_max);
      for (int n = 0; n <= n_max; ++n) {
        Polynomial p;
        for (int k = 0; k <= n; ++k) {
          p += base[static_cast<std::size_t>(k)] * base[static_cast<std::size_t>(n - k)];
        }
        out.push_back(std::move(p));
      }
      break;
    }
    case RuleKind::XBarOf: {
      out.push_back(Polynomial::constant(1));
      if (n_max >= 1) {
        const auto base = inner->polys(n_max - 1);
        for (const auto& p : base) out.push_back(Polynomial::monomial(1) * p);
      }
      break;
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    const auto& p = out[static_cast<std::size_t>(n)];
    if (p.degree() != n || (n == 0 && p.coefficient(0) != 1)) {
      throw CrossCheckError("sequence " + spec.name() + ": p_" + std::to_string(n) +
                            " has degree " + std::to_string(p.degree()) +
                            (n == 0 ? " or is not 1" : ""));
    }
  }
  return out;
}

Rational require_param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

std::vector<Polynomial> bernoulli_polys_closed(int n_max) {
  const auto b = number_sequence(NumberSequenceId::Bernoulli, n_max);
  std::vector<Polynomial> out;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = binomial(n, k) * b[static_cast<std::size_t>(n - k)];
    out.emplace_back(std::move(c));
  }
  return out;
}

// p_n = (2/(n+2)) Σ_(m=0)^(n-2) C(n+2,m) B_(n-m) B_m(x) + (n+1) B_n(x)
std::vector<Polynomial> bernoulli_product_reduced(int n_max) {
  const auto b = number_sequence(NumberSequenceId::Bernoulli, n_max);
  const auto bx = bernoulli_polys_closed(n_max);
  std::vector<Polynomial> out;
  for (int n = 0; n <= n_max; ++n) {
    Polynomial p = Rational(n + 1) * bx[static_cast<std::size_t>(n)];
    const Rational scale = ratio(2, n + 2);
    for (int m = 0; m <= n - 2; ++m) {
      p += scale * binomial(n + 2, m) * b[static_cast<std::size_t>(n - m)] * bx[static_cast<std::size_t>(m)];
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Polynomial> rows_as_polys(const LowerTriangular& t) {
  std::vector<Polynomial> out;
  for (int n = 0; n <= t.n_max(); ++n) out.emplace_back(t.row(n));
  return out;
}

PolySequenceSpec::PairFactory monic(std::function<Series(int)> f) {
  return [f = std::move(f)](int n) { return ShefferPair{Series::constant(n, 1), f(n)}; };
}

}  // namespace

PolySequenceSpec::PolySequenceSpec(std::shared_ptr<State> state) : state_(std::move(state)) {}

PolySequenceSpec PolySequenceSpec::sheffer(std::string name, Params params, PairFactory pair) {
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->params = std::move(params);
  s->rule = RuleKind::Sheffer;
  s->pair = std::move(pair);
  return PolySequenceSpec(std::move(s));
}

PolySequenceSpec PolySequenceSpec::direct(std::string name, Params params, DirectRule rule,
                                          PairFactory annotated) {
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->params = std::move(params);
  s->rule = RuleKind::Direct;
  s->direct = std::move(rule);
  s->annotated = std::move(annotated);
  return PolySequenceSpec(std::move(s));
}

PolySequenceSpec PolySequenceSpec::product(std::string name, const PolySequenceSpec& base) {
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->params = base.params();
  s->rule = RuleKind::Product;
  s->inner = base.state_;
  return PolySequenceSpec(std::move(s));
}

PolySequenceSpec PolySequenceSpec::xbar_of(const PolySequenceSpec& inner) {
  auto s = std::make_shared<State>();
  s->name = inner.name() + "_xbar";
  s->params = inner.params();
  s->rule = RuleKind::XBarOf;
  s->inner = inner.state_;
  return PolySequenceSpec(std::move(s));
}

const std::string& PolySequenceSpec::name() const { return state_->name; }
const Params& PolySequenceSpec::params() const { return state_->params; }
RuleKind PolySequenceSpec::rule() const { return state_->rule; }

ShefferPair PolySequenceSpec::pair(int order) const {
  if (!is_sheffer()) throw UnsupportedRoute("sequence " + name() + " is not given by a Sheffer pair");
  return state_->pair(order);
}

std::optional<ShefferPair> PolySequenceSpec::annotated_pair(int order) const {
  if (is_sheffer()) return state_->pair(order);
  if (state_->annotated) return state_->annotated(order);
  return std::nullopt;
}

Polynomial PolySequenceSpec::poly(int n) const { return polys(n)[static_cast<std::size_t>(n)]; }

std::vector<Polynomial> PolySequenceSpec::polys(int n_max) const {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  const auto need = static_cast<std::size_t>(n_max) + 1;
  {
    std::lock_guard lock(state_->memo_mutex);
    if (state_->memo.size() >= need) {
      return {state_->memo.begin(), state_->memo.begin() + static_cast<std::ptrdiff_t>(need)};
    }
  }
  std::optional<PolySequenceSpec> inner;
  if (state_->inner) inner = PolySequenceSpec(state_->inner);
  auto fresh = generate(*this, state_->pair, state_->direct, state_->rule, inner, n_max);
  std::lock_guard lock(state_->memo_mutex);
  if (state_->memo.size() < fresh.size()) state_->memo = fresh;
  fresh.resize(need);
  return fresh;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"monomials", "x^n", {}},
      {"falling_lambda", "generalized falling factorials (x)_(n,lambda)", {"lambda"}},
      {"rising", "rising factorials <x>_n", {}},
      {"rising_lambda", "generalized rising factorials <x>_(n,lambda)", {"lambda"}},
      {"tlb1", "central factorial Lah-Bell polynomials of the first kind", {}},
      {"tlb2", "central factorial Lah-Bell polynomials of the second kind", {}},
      {"central_bell", "central Bell polynomials", {}},
      {"degenerate_central_bell", "degenerate central Bell polynomials", {"lambda"}},
      {"central_factorial_lambda", "degenerate central factorials x^[n,lambda]", {"lambda"}},
      {"lah_bell", "Lah-Bell polynomials", {}},
      {"degenerate_lah_bell", "degenerate Lah-Bell polynomials", {"lambda"}},
      {"bell", "Bell polynomials", {}},
      {"partially_degenerate_bell", "partially degenerate Bell polynomials", {"lambda"}},
      {"fully_degenerate_bell", "fully degenerate Bell polynomials", {"lambda"}},
      {"mittag_leffler", "Mittag-Leffler polynomials", {}},
      {"laguerre", "Laguerre polynomials of order -1", {}},
      {"bernoulli", "Bernoulli polynomials", {}},
      {"euler", "Euler polynomials", {}},
      {"gould_hopper", "(r x + s)_n", {"r", "s"}},
      {"bernoulli2", "Bernoulli polynomials of the second kind", {}},
      {"poisson_charlier", "Poisson-Charlier polynomials C_n(x; a)", {"a"}},
      {"bernoulli_product", "sum_k B_k(x) B_(n-k)(x)", {}},
  };
  return entries;
}

Params default_params() {
  return {{"lambda", ratio(1, 3)}, {"r", Rational(2)}, {"s", Rational(1)}, {"a", ratio(1, 2)}};
}

PolySequenceSpec catalog(std::string_view name_view, const Params& all_params) {
  const CatalogEntry* entry = nullptr;
  for (const auto& e : catalog_entries()) {
    if (e.name == name_view) entry = &e;
  }
  if (entry == nullptr) throw UsageError("unknown sequence '" + std::string(name_view) + "'");
  Params params;
  for (const auto& key : entry->params) params[key] = require_param(all_params, key);
  for (const char* key : {"lambda", "r", "a"}) {
    if (params.count(key) && sgn(params[key]) == 0) {
      throw DomainError("sequence " + entry->name + " requires " + key + " != 0");
    }
  }
  const std::string name = entry->name;
  const Rational lam = params.count("lambda") ? params["lambda"] : Rational(1);
  const auto sheffer = [&](PolySequenceSpec::PairFactory f) { return PolySequenceSpec::sheffer(name, params, std::move(f)); };

  if (name == "monomials") return sheffer(monic([](int n) { return Series::variable(n); }));
  if (name == "falling_lambda") {
    return sheffer(monic([lam](int n) { return (exp_scaled(n, lam) - Rational(1)) / lam; }));
  }
  if (name == "rising") {
    return sheffer(monic([](int n) { return Series::constant(n, 1) - exp_scaled(n, -1); }));
  }
  if (name == "rising_lambda") {
    return sheffer(monic([lam](int n) { return (Series::constant(n, 1) - exp_scaled(n, -lam)) / lam; }));
  }
  if (name == "tlb1") {
    return PolySequenceSpec::direct(
        name, params,
        [](int n_max) {
          return rows_as_polys(triangle_by_algebra(TriangleFamily::make(FamilyId::TL1), n_max).entries);
        },
        monic([](int n) { return compose(alpha_bar(n), central_delta(n)); }));
  }
  if (name == "tlb2") {
    return PolySequenceSpec::direct(
        name, params,
        [](int n_max) {
          return rows_as_polys(triangle_by_algebra(TriangleFamily::make(FamilyId::TL2), n_max).entries);
        },
        monic([](int n) { return compose(central_delta_inverse(n), alpha(n)); }));
  }
  if (name == "central_bell") return sheffer(monic([](int n) { return central_delta_inverse(n); }));
  if (name == "degenerate_central_bell") {
    return sheffer(monic([lam](int n) {
      const Series h = central_half_root(n);
      return degenerate_log(h * h, lam);
    }));
  }
  if (name == "central_factorial_lambda") {
    return sheffer(monic([lam](int n) {
      return (exp_scaled(n, lam / 2) - exp_scaled(n, -lam / 2)) / lam;
    }));
  }
  if (name == "lah_bell") {
    return sheffer(monic([](int n) { return Series::variable(n) * reciprocal(linear(n, 1)); }));
  }
  if (name == "degenerate_lah_bell") {
    return sheffer(monic([lam](int n) {
      const Series em1 = exp_scaled(n, lam) - Rational(1);
      return em1 * reciprocal(em1 + lam);
    }));
  }
  if (name == "bell") return sheffer(monic([](int n) { return log_series(linear(n, 1)); }));
  if (name == "partially_degenerate_bell") {
    return sheffer(monic([lam](int n) { return degenerate_log(linear(n, 1), lam); }));
  }
  if (name == "fully_degenerate_bell") {
    return sheffer(monic([lam](int n) {
      return degenerate_log((exp_scaled(n, lam) - Rational(1)) / lam + Rational(1), lam);
    }));
  }
  if (name == "mittag_leffler") {
    return sheffer(monic([](int n) {
      const Series e = exp_scaled(n, 1);
      return (e - Rational(1)) * reciprocal(e + Rational(1));
    }));
  }
  if (name == "laguerre") {
    return sheffer(monic([](int n) { return -Series::variable(n) * reciprocal(linear(n, -1)); }));
  }
  if (name == "bernoulli") {
    return sheffer([](int n) {
      return ShefferPair{div_by_t(exp_scaled(n + 1, 1) - Rational(1)), Series::variable(n)};
    });
  }
  if (name == "euler") {
    return sheffer([](int n) {
      return ShefferPair{(exp_scaled(n, 1) + Rational(1)) / 2, Series::variable(n)};
    });
  }
  if (name == "gould_hopper") {
    const Rational r = params["r"];
    const Rational s = params["s"];
    return sheffer([r, s](int n) {
      return ShefferPair{exp_scaled(n, -s / r), exp_scaled(n, 1 / r) - Rational(1)};
    });
  }
  if (name == "bernoulli2") {
    return sheffer([](int n) {
      return ShefferPair{reciprocal(div_by_t(exp_scaled(n + 1, 1) - Rational(1))),
                         exp_scaled(n, 1) - Rational(1)};
    });
  }
  if (name == "poisson_charlier") {
    const Rational a = params["a"];
    return sheffer([a](int n) {
      const Series f = a * (exp_scaled(n, 1) - Rational(1));
      return ShefferPair{exp_series(f), f};
    });
  }
  // bernoulli_product
  return PolySequenceSpec::direct(name, params, bernoulli_product_reduced);
}

PolySequenceSpec bernoulli_product_by_definition() {
  return PolySequenceSpec::product(
      "bernoulli_product",
      PolySequenceSpec::direct("bernoulli", {}, bernoulli_polys_closed));
}

}  // namespace cfnum
