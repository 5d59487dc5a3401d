#include "cfnum/triangles.hpp"

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "cfnum/bases.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/generating_functions.hpp"
#include "cfnum/polynomial.hpp"

namespace cfnum {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view key;
  std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table{
      {FamilyId::S1, "s1", {}},
      {FamilyId::S2, "s2", {}},
      {FamilyId::S1Lambda, "s1l", {"lambda"}},
      {FamilyId::S2Lambda, "s2l", {"lambda"}},
      {FamilyId::T1, "t1", {}},
      {FamilyId::T2, "t2", {}},
      {FamilyId::T1Lambda, "t1l", {"lambda"}},
      {FamilyId::T2Lambda, "t2l", {"lambda"}},
      {FamilyId::R1Lambda, "r1l", {"lambda"}},
      {FamilyId::R2Lambda, "r2l", {"lambda"}},
      {FamilyId::Lah, "lah", {}},
      {FamilyId::L1c, "l1c", {}},
      {FamilyId::L2c, "l2c", {}},
      {FamilyId::TL1, "tl1", {}},
      {FamilyId::TL2, "tl2", {}},
      {FamilyId::GouldHopper, "gh", {"r", "s"}},
  };
  return table;
}

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : family_table()) {
    if (f.id == id) return f;
  }
  throw UsageError("unknown triangle family");
}

// f(c t)
Series scale_argument(const Series& f, const Rational& c) {
  std::vector<Rational> out(f.coefficients().begin(), f.coefficients().end());
  Rational p(1);
  for (auto& x : out) {
    x *= p;
    p *= c;
  }
  return Series(f.order(), std::move(out));
}

LowerTriangular lah_closed(int n_max) {
  LowerTriangular out(n_max);
  out.set(0, 0, 1);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) out.set(n, k, binomial(n - 1, k - 1) * factorial(n) / factorial(k));
  }
  return out;
}

// (1/k!) α^k with α = t (1 - t^2/4)^(-1): coefficient n = k + 2j.
LowerTriangular l2c_closed(int n_max) {
  LowerTriangular out(n_max);
  out.set(0, 0, 1);
  for (int k = 1; k <= n_max; ++k) {
    for (int j = 0; k + 2 * j <= n_max; ++j) {
      const int n = k + 2 * j;
      out.set(n, k, factorial(n) / factorial(k) * binomial(k + j - 1, j) * power(Rational(1, 4), j));
    }
  }
  return out;
}

// ᾱ is the compositional inverse of α, so Lagrange inversion gives
// [t^n] ᾱ^k = (k/n) [t^(n-k)] (1 - t^2/4)^n.
LowerTriangular l1c_closed(int n_max) {
  LowerTriangular out(n_max);
  out.set(0, 0, 1);
  for (int k = 1; k <= n_max; ++k) {
    for (int j = 0; k + 2 * j <= n_max; ++j) {
      const int n = k + 2 * j;
      out.set(n, k,
              factorial(n) / factorial(k) * ratio(k, n) * binomial(n, j) *
                  power(Rational(-1, 4), j));
    }
  }
  return out;
}

LowerTriangular gould_hopper_expanded(const Rational& r, const Rational& s, int n_max) {
  LowerTriangular out(n_max);
  const BasisId falling = BasisId::of(BasisKind::Falling);
  Polynomial p = Polynomial::constant(1);
  for (int n = 0; n <= n_max; ++n) {
    const auto row = from_monomial(p, falling);
    for (std::size_t k = 0; k < row.size(); ++k) out.set(n, static_cast<int>(k), row[k]);
    p = p * Polynomial::linear(r, s - n);
  }
  return out;
}

}  // namespace

TriangleFamily TriangleFamily::make(FamilyId id, const Params& params) {
  TriangleFamily fam;
  fam.id = id;
  for (const auto& name : info(id).params) {
    auto it = params.find(name);
    if (it == params.end()) {
      throw UsageError("family " + family_key(id) + " requires parameter '" + name + "'");
    }
    fam.params[name] = it->second;
  }
  if (fam.params.count("lambda") && sgn(fam.params["lambda"]) == 0) {
    throw DomainError("family " + family_key(id) + " requires lambda != 0");
  }
  if (fam.params.count("r") && sgn(fam.params["r"]) == 0) {
    throw DomainError("family gh requires r != 0");
  }
  return fam;
}

Rational TriangleFamily::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw UsageError("missing parameter '" + name + "'");
  return it->second;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& f : family_table()) v.push_back(f.id);
    return v;
  }();
  return ids;
}

std::string family_key(FamilyId id) { return std::string(info(id).key); }

FamilyId family_from_key(std::string_view key) {
  for (const auto& f : family_table()) {
    if (f.key == key) return f.id;
  }
  throw UsageError("unknown triangle family '" + std::string(key) + "'");
}

std::vector<std::string> family_param_names(FamilyId id) { return info(id).params; }

ColumnGenerator family_generator(const TriangleFamily& family, int order) {
  const int n = order;
  const Series one = Series::constant(n, 1);
  const Series t = Series::variable(n);
  switch (family.id) {
    case FamilyId::S1:
      return {one, log_series(linear(n, 1))};
    case FamilyId::S2:
      return {one, exp_scaled(n, 1) - Rational(1)};
    case FamilyId::S1Lambda:
      return {one, degenerate_log(linear(n, 1), family.param("lambda"))};
    case FamilyId::S2Lambda:
      return {one, degenerate_exp(n, family.param("lambda")) - Rational(1)};
    case FamilyId::T1:
      return {one, central_delta_inverse(n)};
    case FamilyId::T2:
      return {one, central_delta(n)};
    case FamilyId::T1Lambda: {
      const Series h = central_half_root(n);
      return {one, degenerate_log(h * h, family.param("lambda"))};
    }
    case FamilyId::T2Lambda: {
      const Rational lam = family.param("lambda");
      return {one, degenerate_exp(n, lam, Rational(1, 2)) - degenerate_exp(n, lam, Rational(-1, 2))};
    }
    case FamilyId::R1Lambda: {
      const Rational lam = family.param("lambda");
      return {one, scale_argument(central_delta_inverse(n), lam) / lam};
    }
    case FamilyId::R2Lambda: {
      const Rational lam = family.param("lambda");
      return {one, scale_argument(central_delta(n), lam) / lam};
    }
    case FamilyId::Lah:
      return {one, t * reciprocal(linear(n, -1))};
    case FamilyId::L1c:
      return {one, alpha_bar(n)};
    case FamilyId::L2c:
      return {one, alpha(n)};
    case FamilyId::TL1:
      return {one, compose(central_delta_inverse(n), alpha(n))};
    case FamilyId::TL2:
      return {one, compose(alpha_bar(n), central_delta(n))};
    case FamilyId::GouldHopper:
      return {pow_rational(linear(n, 1), family.param("s")),
              pow_rational(linear(n, 1), family.param("r")) - Rational(1)};
  }
  throw UsageError("unknown triangle family");
}

LowerTriangular columns_from_generator(const ColumnGenerator& gen, int n_max) {
  if (gen.base.order() < n_max || gen.weight.order() < n_max) {
    throw UsageError("series order " + std::to_string(gen.base.order()) + " is below n_max " +
                     std::to_string(n_max));
  }
  LowerTriangular out(n_max);
  Series acc = gen.weight;
  for (int k = 0; k <= n_max; ++k) {
    const Rational inv_kfact = 1 / factorial(k);
    for (int n = k; n <= n_max; ++n) {
      if (sgn(acc[n]) != 0) out.set(n, k, acc[n] * factorial(n) * inv_kfact);
    }
    if (k < n_max) acc *= gen.base;
  }
  return out;
}

Triangle triangle_by_series(const TriangleFamily& family, int n_max, int order) {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  if (order < 0) order = 2 * n_max + 2;
  if (order < n_max) {
    throw UsageError("series order " + std::to_string(order) + " is below n_max " +
                     std::to_string(n_max));
  }
  return {family, columns_from_generator(family_generator(family, order), n_max)};
}

Triangle triangle_by_algebra(const TriangleFamily& family, int n_max) {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  const auto basis = [&](BasisKind kind) {
    return kind == BasisKind::FallingLambda || kind == BasisKind::CentralLambda
               ? BasisId::of(kind, family.param("lambda"))
               : BasisId::of(kind);
  };
  const auto conn = [&](BasisKind src, BasisKind dst) {
    return connection_matrix(basis(src), basis(dst), n_max);
  };
  using B = BasisKind;
  LowerTriangular t;
  switch (family.id) {
    case FamilyId::S1: t = conn(B::Falling, B::Monomial); break;
    case FamilyId::S2: t = conn(B::Monomial, B::Falling); break;
    case FamilyId::S1Lambda: t = conn(B::Falling, B::FallingLambda); break;
    case FamilyId::S2Lambda: t = conn(B::FallingLambda, B::Falling); break;
    case FamilyId::T1: t = conn(B::Central, B::Monomial); break;
    case FamilyId::T2: t = conn(B::Monomial, B::Central); break;
    case FamilyId::T1Lambda: t = conn(B::Central, B::FallingLambda); break;
    case FamilyId::T2Lambda: t = conn(B::FallingLambda, B::Central); break;
    case FamilyId::R1Lambda: t = conn(B::CentralLambda, B::Monomial); break;
    case FamilyId::R2Lambda: t = conn(B::Monomial, B::CentralLambda); break;
    case FamilyId::Lah: t = lah_closed(n_max); break;
    case FamilyId::L1c: t = l1c_closed(n_max); break;
    case FamilyId::L2c: t = l2c_closed(n_max); break;
    case FamilyId::TL1: t = multiply(l2c_closed(n_max), conn(B::Central, B::Monomial)); break;
    case FamilyId::TL2: t = multiply(conn(B::Monomial, B::Central), l1c_closed(n_max)); break;
    case FamilyId::GouldHopper:
      t = gould_hopper_expanded(family.param("r"), family.param("s"), n_max);
      break;
  }
  return {family, std::move(t)};
}

std::shared_ptr<const LowerTriangular> cached_triangle(const TriangleFamily& family, int n_max) {
  static std::shared_mutex mutex;
  static std::map<std::string, std::shared_ptr<const LowerTriangular>> cache;
  const std::string key =
      family_key(family.id) + "|" + params_label(family.params) + "|" + std::to_string(n_max);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const LowerTriangular>(triangle_by_series(family, n_max).entries);
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const LowerTriangular> classical(FamilyId id, int n_max) {
  return cached_triangle(TriangleFamily::make(id), n_max);
}

std::vector<Rational> number_sequence(NumberSequenceId id, int n_max, const Rational& x0) {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  const int n = n_max;
  Series s;
  switch (id) {
    case NumberSequenceId::Bernoulli:
      s = reciprocal(div_by_t(exp_scaled(n + 1, 1) - Rational(1)));
      break;
    case NumberSequenceId::Euler:
      s = 2 * reciprocal(exp_scaled(n, 1) + Rational(1));
      break;
    case NumberSequenceId::Bernoulli2nd:
      s = reciprocal(div_by_t(log_series(linear(n + 1, 1))));
      break;
    case NumberSequenceId::Bell:
      s = exp_series(x0 * (exp_scaled(n, 1) - Rational(1)));
      break;
    case NumberSequenceId::CentralBell:
      s = exp_series(x0 * central_delta(n));
      break;
  }
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(s.egf_coefficient(k));
  return out;
}

}  // namespace cfnum
