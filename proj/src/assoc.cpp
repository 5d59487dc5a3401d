#include "cfnum/assoc.hpp"

#include <array>
#include <utility>

#include "cfnum/bases.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/generating_functions.hpp"
#include "cfnum/triangles.hpp"

namespace cfnum {

namespace {

constexpr std::array<std::pair<T2Route, std::string_view>, 3> kT2Routes{{
    {T2Route::Explicit, "explicit"},
    {T2Route::Derivative, "derivative"},
    {T2Route::GenFunc, "genfunc"},
}};

constexpr std::array<std::pair<T1Route, std::string_view>, 4> kT1Routes{{
    {T1Route::Functional, "functional"},
    {T1Route::Solve, "solve"},
    {T1Route::GenFunc, "genfunc"},
    {T1Route::Matrix, "matrix"},
}};

int default_order(int n_max, int order) {
  if (order < 0) return 2 * n_max + 2;
  if (order < std::max(n_max, 1)) {
    throw UsageError("series order " + std::to_string(order) + " is below n_max " +
                     std::to_string(n_max));
  }
  return order;
}

std::vector<Polynomial> central_polys(int n_max) {
  std::vector<Polynomial> out;
  const BasisId central = BasisId::of(BasisKind::Central);
  for (int n = 0; n <= n_max; ++n) out.push_back(basis_poly(central, n));
  return out;
}

LowerTriangular t2_explicit(const PolySequenceSpec& spec, int n_max) {
  const auto t2 = classical(FamilyId::T2, n_max);
  const auto p = spec.polys(n_max);
  LowerTriangular out(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      Rational acc;
      for (int l = k; l <= n; ++l) acc += t2->at(l, k) * p[static_cast<std::size_t>(n)].coefficient(l);
      out.set(n, k, acc);
    }
  }
  return out;
}

LowerTriangular t2_derivative(const PolySequenceSpec& spec, int n_max) {
  const auto s2 = classical(FamilyId::S2, n_max);
  const auto p = spec.polys(n_max);
  LowerTriangular out(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const auto& pn = p[static_cast<std::size_t>(n)];
    for (int k = 0; k <= n; ++k) {
      const Rational x0 = ratio(-k, 2);
      Rational acc;
      for (int l = k; l <= n; ++l) {
        if (sgn(s2->at(l, k)) != 0) acc += s2->at(l, k) * pn.derivative_taylor(x0, l);
      }
      out.set(n, k, acc);
    }
  }
  return out;
}

LowerTriangular t2_genfunc(const PolySequenceSpec& spec, int n_max, int order) {
  const ShefferPair pair = spec.pair(order);
  pair.validate();
  const Series fbar = comp_inverse(pair.f);
  const Series weight = reciprocal(compose(pair.g, fbar));
  return columns_from_generator({weight, compose(central_delta(order), fbar)}, n_max);
}

LowerTriangular t1_functional(const PolySequenceSpec& spec, int n_max, int order) {
  const ShefferPair pair = spec.pair(order);
  pair.validate();
  const auto xc = central_polys(n_max);
  LowerTriangular out(n_max);
  Series acc = pair.g;
  for (int k = 0; k <= n_max; ++k) {
    const Rational inv_kfact = 1 / factorial(k);
    for (int n = k; n <= n_max; ++n) {
      out.set(n, k, functional_apply(acc, xc[static_cast<std::size_t>(n)]) * inv_kfact);
    }
    if (k < n_max) acc *= pair.f;
  }
  return out;
}

LowerTriangular t1_solve(const PolySequenceSpec& spec, int n_max) {
  const auto p = spec.polys(n_max);
  const auto xc = central_polys(n_max);
  LowerTriangular out(n_max);
  for (int n = 0; n <= n_max; ++n) {
    Polynomial rest = xc[static_cast<std::size_t>(n)];
    for (int j = n; j >= 0; --j) {
      const Rational c = rest.coefficient(j) / p[static_cast<std::size_t>(j)].leading();
      if (sgn(c) == 0) continue;
      out.set(n, j, c);
      rest -= c * p[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

LowerTriangular t1_genfunc(const PolySequenceSpec& spec, int n_max, int order) {
  const ShefferPair pair = spec.pair(order);
  pair.validate();
  if (pair.g != Series::constant(order, 1)) {
    throw UnsupportedRoute("route genfunc for T1 needs a pair (1, f); " + spec.name() +
                           " has g != 1");
  }
  return columns_from_generator({Series::constant(order, 1), central_log(pair.f)}, n_max);
}

}  // namespace

std::string route_key(T2Route r) {
  for (const auto& [id, key] : kT2Routes) {
    if (id == r) return std::string(key);
  }
  return "?";
}

std::string route_key(T1Route r) {
  for (const auto& [id, key] : kT1Routes) {
    if (id == r) return std::string(key);
  }
  return "?";
}

T2Route t2_route_from_key(std::string_view key) {
  for (const auto& [id, name] : kT2Routes) {
    if (name == key) return id;
  }
  throw UsageError("unknown route '" + std::string(key) + "' for kind t2");
}

T1Route t1_route_from_key(std::string_view key) {
  for (const auto& [id, name] : kT1Routes) {
    if (name == key) return id;
  }
  throw UsageError("unknown route '" + std::string(key) + "' for kind t1");
}

std::optional<int> t2_reconstruction_failure(const PolySequenceSpec& spec, const LowerTriangular& t) {
  const int n_max = t.n_max();
  const auto p = spec.polys(n_max);
  const auto xc = central_polys(n_max);
  for (int n = 0; n <= n_max; ++n) {
    Polynomial sum;
    for (int k = 0; k <= n; ++k) sum += t.at(n, k) * xc[static_cast<std::size_t>(k)];
    if (sum != p[static_cast<std::size_t>(n)]) return n;
  }
  return std::nullopt;
}

std::optional<int> t1_reconstruction_failure(const PolySequenceSpec& spec, const LowerTriangular& t) {
  const int n_max = t.n_max();
  const auto p = spec.polys(n_max);
  const auto xc = central_polys(n_max);
  for (int n = 0; n <= n_max; ++n) {
    Polynomial sum;
    for (int k = 0; k <= n; ++k) sum += t.at(n, k) * p[static_cast<std::size_t>(k)];
    if (sum != xc[static_cast<std::size_t>(n)]) return n;
  }
  return std::nullopt;
}

LowerTriangular assoc_t2(const PolySequenceSpec& spec, int n_max, T2Route route, int order) {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  LowerTriangular out;
  switch (route) {
    case T2Route::Explicit: out = t2_explicit(spec, n_max); break;
    case T2Route::Derivative: out = t2_derivative(spec, n_max); break;
    case T2Route::GenFunc: out = t2_genfunc(spec, n_max, default_order(n_max, order)); break;
  }
  if (auto bad = t2_reconstruction_failure(spec, out)) {
    throw CrossCheckError("T2 route " + route_key(route) + " for " + spec.name() +
                          " fails reconstruction at n = " + std::to_string(*bad));
  }
  return out;
}

LowerTriangular assoc_t1(const PolySequenceSpec& spec, int n_max, T1Route route, int order) {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  LowerTriangular out;
  switch (route) {
    case T1Route::Functional: out = t1_functional(spec, n_max, default_order(n_max, order)); break;
    case T1Route::Solve: out = t1_solve(spec, n_max); break;
    case T1Route::GenFunc: out = t1_genfunc(spec, n_max, default_order(n_max, order)); break;
    case T1Route::Matrix:
      if (spec.name() != "bernoulli_product") {
        throw UnsupportedRoute("route matrix applies only to bernoulli_product");
      }
      out = bernoulli_product_t1(n_max);
      break;
  }
  if (auto bad = t1_reconstruction_failure(spec, out)) {
    throw CrossCheckError("T1 route " + route_key(route) + " for " + spec.name() +
                          " fails reconstruction at n = " + std::to_string(*bad));
  }
  return out;
}

LowerTriangular bernoulli_product_t1(int n_max) {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  const auto t1 = classical(FamilyId::T1, n_max);
  const auto b = number_sequence(NumberSequenceId::Bernoulli, n_max);
  const auto eps = [&](int m, int k) -> Rational {
    return ratio(2, k + 2) * binomial(k + 2, m) * b[static_cast<std::size_t>(k - m)];
  };
  LowerTriangular out(n_max);
  for (int n = 0; n <= n_max; ++n) {
    // x^[n] = Σ_m γ_m B_m(x)
    std::vector<Rational> gamma(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      for (int l = m; l <= n; ++l) {
        if (sgn(t1->at(n, l)) != 0) gamma[static_cast<std::size_t>(m)] += ratio(1, l + 1) * binomial(l + 1, m) * t1->at(n, l);
      }
    }
    std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
    for (int m = n; m >= 0; --m) {
      Rational acc = gamma[static_cast<std::size_t>(m)];
      for (int k = m + 2; k <= n; ++k) acc -= eps(m, k) * s[static_cast<std::size_t>(k)];
      s[static_cast<std::size_t>(m)] = acc / (m + 1);
      out.set(n, m, s[static_cast<std::size_t>(m)]);
    }
  }
  return out;
}

}  // namespace cfnum
