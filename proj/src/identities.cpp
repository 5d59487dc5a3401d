#include "cfnum/identities.hpp"

#include <functional>
#include <random>

#include "cfnum/assoc.hpp"
#include "cfnum/closed_forms.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/triangles.hpp"

namespace cfnum {

namespace {

using Entry = std::function<Rational(int, int)>;

Rational sign(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

IdentityCheck make(std::string id, std::string sequence, int n_max) {
  IdentityCheck c;
  c.id = std::move(id);
  c.sequence = std::move(sequence);
  c.n_max = n_max;
  return c;
}

Witness witness(int n, int k, Rational lhs, Rational rhs, std::string detail) {
  return Witness{n, k, std::move(lhs), std::move(rhs), std::move(detail)};
}

// First entry (row-major) where a and b differ.
std::optional<Witness> first_mismatch(const LowerTriangular& a, const LowerTriangular& b,
                                      int n_max, const std::string& detail) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (a.at(n, k) != b.at(n, k)) return witness(n, k, a.at(n, k), b.at(n, k), detail);
    }
  }
  return std::nullopt;
}

std::optional<Witness> first_non_identity(const LowerTriangular& p, int n_max, const std::string& detail) {
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 0; l <= n; ++l) {
      const Rational want = (n == l) ? 1 : 0;
      if (p.at(n, l) != want) return witness(n, l, p.at(n, l), want, detail);
    }
  }
  return std::nullopt;
}

// T2 through the generating function when available, T1 through the
// functional when available, so that orthogonality compares independent routes.
LowerTriangular independent_t2(const PolySequenceSpec& spec, int n_max) {
  return assoc_t2(spec, n_max, spec.is_sheffer() ? T2Route::GenFunc : T2Route::Explicit);
}

LowerTriangular independent_t1(const PolySequenceSpec& spec, int n_max) {
  if (spec.is_sheffer()) return assoc_t1(spec, n_max, T1Route::Functional);
  if (spec.name() == "bernoulli_product") return assoc_t1(spec, n_max, T1Route::Matrix);
  return assoc_t1(spec, n_max, T1Route::Solve);
}

class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : gen_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    const long p = num(gen_);
    return ratio(p, den(gen_));
  }

  std::vector<Rational> vector(int n_max) {
    std::vector<Rational> v;
    for (int i = 0; i <= n_max; ++i) v.push_back(next());
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

std::vector<Rational> lower_apply(const LowerTriangular& t, const std::vector<Rational>& v, int n_max) {
  std::vector<Rational> out(v.size());
  for (int n = 0; n <= n_max; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) acc += t.at(n, k) * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

// out_n = Σ_(k=n)^m t(k,n) v_k
std::vector<Rational> upper_apply(const LowerTriangular& t, const std::vector<Rational>& v, int m) {
  std::vector<Rational> out(v.size());
  for (int n = 0; n <= m; ++n) {
    Rational acc;
    for (int k = n; k <= m; ++k) acc += t.at(k, n) * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

std::optional<Witness> first_vector_mismatch(const std::vector<Rational>& got, const std::vector<Rational>& want,
                                             int trial, const std::string& detail) {
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i] != want[i]) return witness(static_cast<int>(i), trial, got[i], want[i], detail);
  }
  return std::nullopt;
}

IdentityCheck guarded(IdentityCheck c, const std::function<std::optional<Witness>()>& body) {
  try {
    c.witness = body();
  } catch (const std::exception& e) {
    c.witness = witness(-1, -1, 0, 0, std::string("exception: ") + e.what());
  }
  return c;
}

}  // namespace

IdentityCheck check_orthogonality(const LowerTriangular& t1, const LowerTriangular& t2, std::string sequence) {
  const int n_max = std::min(t1.n_max(), t2.n_max());
  IdentityCheck c = make("orthogonality", std::move(sequence), n_max);
  c.witness = first_non_identity(multiply(t1.truncated(n_max), t2.truncated(n_max)), n_max, "sum_k T1(n,k) T2(k,l)");
  if (!c.witness) {
    c.witness = first_non_identity(multiply(t2.truncated(n_max), t1.truncated(n_max)), n_max, "sum_k T2(n,k) T1(k,l)");
  }
  return c;
}

IdentityCheck check_orthogonality(const PolySequenceSpec& spec, int n_max) {
  return guarded(make("orthogonality", spec.name(), n_max), [&]() {
    return check_orthogonality(independent_t1(spec, n_max), independent_t2(spec, n_max), spec.name()).witness;
  });
}

IdentityCheck check_inverse_relations(const PolySequenceSpec& spec, int n_max, int trials, std::uint64_t seed) {
  if (trials < 1) throw UsageError("trials must be at least 1");
  return guarded(make("inverse_relations", spec.name(), n_max), [&]() -> std::optional<Witness> {
    const auto t1 = independent_t1(spec, n_max);
    const auto t2 = independent_t2(spec, n_max);
    RationalSource rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      const auto c = rng.vector(n_max);
      if (auto w = first_vector_mismatch(lower_apply(t1, lower_apply(t2, c, n_max), n_max), c, trial,
                                         "a = T2 c, c = T1 a")) {
        return w;
      }
      if (auto w = first_vector_mismatch(lower_apply(t2, lower_apply(t1, c, n_max), n_max), c, trial,
                                         "c = T1 a, a = T2 c")) {
        return w;
      }
      if (auto w = first_vector_mismatch(upper_apply(t1, upper_apply(t2, c, n_max), n_max), c, trial,
                                         "a_n = sum_(k>=n) T2(k,n) c_k, inverted by T1")) {
        return w;
      }
      if (auto w = first_vector_mismatch(upper_apply(t2, upper_apply(t1, c, n_max), n_max), c, trial,
                                         "c_n = sum_(k>=n) T1(k,n) a_k, inverted by T2")) {
        return w;
      }
    }
    return std::nullopt;
  });
}

IdentityCheck check_closed_forms(const PolySequenceSpec& spec, int n_max) {
  return guarded(make("closed_forms", spec.name(), n_max), [&]() -> std::optional<Witness> {
    const auto t2 = assoc_t2(spec, n_max, T2Route::Explicit);
    for (const auto& cf : closed_forms_t2(spec, n_max)) {
      if (auto w = first_mismatch(cf.table, t2, n_max, "T2: " + cf.label)) return w;
    }
    const auto t1 = assoc_t1(spec, n_max, T1Route::Solve);
    for (const auto& cf : closed_forms_t1(spec, n_max)) {
      if (auto w = first_mismatch(cf.table, t1, n_max, "T1: " + cf.label)) return w;
    }
    return std::nullopt;
  });
}

IdentityCheck check_tl_compositions(int n_max) {
  return guarded(make("closed_forms", "tl_compositions", n_max), [&]() -> std::optional<Witness> {
    const auto T1 = classical(FamilyId::T1, n_max);
    const auto T2 = classical(FamilyId::T2, n_max);
    const auto L1c = classical(FamilyId::L1c, n_max);
    const auto L2c = classical(FamilyId::L2c, n_max);
    if (auto w = first_mismatch(*classical(FamilyId::TL1, n_max), multiply(*L2c, *T1), n_max,
                                "TL1(n,k) = sum_l L2c(n,l) T1(l,k)")) {
      return w;
    }
    return first_mismatch(*classical(FamilyId::TL2, n_max), multiply(*T2, *L1c), n_max,
                          "TL2(n,k) = sum_l T2(n,l) L1c(l,k)");
  });
}

IdentityCheck check_recurrences(const PolySequenceSpec& spec, int n_max) {
  return guarded(make("recurrences", spec.name(), n_max), [&]() -> std::optional<Witness> {
    const auto bar = PolySequenceSpec::xbar_of(spec);
    const auto t2 = assoc_t2(spec, n_max, T2Route::Explicit);
    const auto t2_bar = assoc_t2(bar, n_max + 1, T2Route::Explicit);
    for (int n = 0; n < n_max; ++n) {
      for (int k = 0; k <= n + 1; ++k) {
        const Rational lhs = t2_bar.at(n + 1, k);
        const Rational rhs = (k >= 1 ? t2.at(n, k - 1) : Rational(0)) + ratio(k, 2) * t2.at(n, k);
        if (lhs != rhs) {
          return witness(n + 1, k, lhs, rhs, "T2(n+1,k;Pbar) = T2(n,k-1;P) + (k/2) T2(n,k;P)");
        }
      }
    }
    const auto t1 = assoc_t1(spec, n_max, T1Route::Solve);
    const auto t1_bar = assoc_t1(bar, n_max + 1, T1Route::Solve);
    for (int n = 0; n < n_max; ++n) {
      for (int k = 0; k <= n + 1; ++k) {
        const Rational lhs = t1_bar.at(n + 1, k);
        const Rational rhs = (k >= 1 ? t1.at(n, k - 1) : Rational(0)) - ratio(n, 2) * t1_bar.at(n, k);
        if (lhs != rhs) {
          return witness(n + 1, k, lhs, rhs, "T1(n+1,k;Pbar) = T1(n,k-1;P) - (n/2) T1(n,k;Pbar)");
        }
      }
    }
    return std::nullopt;
  });
}

IdentityCheck check_sum_rule(const PolySequenceSpec& spec, int n_max) {
  return guarded(make("sum_rule", spec.name(), n_max), [&]() -> std::optional<Witness> {
    const auto t1 = independent_t1(spec, n_max);
    const auto p = spec.polys(n_max);
    for (int n = 1; n <= n_max; ++n) {
      Rational lhs;
      for (int k = 0; k <= n; ++k) lhs += t1.at(n, k) * p[static_cast<std::size_t>(k)].eval(1);
      const Rational rhs = falling_factorial(ratio(n, 2), n - 1);
      if (lhs != rhs) return witness(n, -1, lhs, rhs, "sum_k T1(n,k) p_k(1) = (n/2)_(n-1)");
    }
    return std::nullopt;
  });
}

IdentityCheck check_routes(const PolySequenceSpec& spec, int n_max) {
  return guarded(make("routes", spec.name(), n_max), [&]() -> std::optional<Witness> {
    const auto base2 = assoc_t2(spec, n_max, T2Route::Explicit);
    std::vector<T2Route> r2 = {T2Route::Derivative};
    if (spec.is_sheffer()) r2.push_back(T2Route::GenFunc);
    for (auto r : r2) {
      if (auto w = first_mismatch(assoc_t2(spec, n_max, r), base2, n_max, "T2 " + route_key(r) + " vs explicit")) {
        return w;
      }
    }
    const auto base1 = assoc_t1(spec, n_max, T1Route::Solve);
    std::vector<T1Route> r1;
    if (spec.is_sheffer()) r1 = {T1Route::Functional, T1Route::GenFunc};
    if (spec.name() == "bernoulli_product") r1.push_back(T1Route::Matrix);
    for (auto r : r1) {
      LowerTriangular t(0);
      try {
        t = assoc_t1(spec, n_max, r);
      } catch (const UnsupportedRoute&) {
        continue;  // GenFunc only covers pairs with g = 1
      }
      if (auto w = first_mismatch(t, base1, n_max, "T1 " + route_key(r) + " vs solve")) return w;
    }
    return std::nullopt;
  });
}

namespace {

// One inversion display: the two triple sums
//   Σ_(k=l)^n Σ_(m=k)^n Σ_(j=l)^k T1(n,m) A(m,k) B(k,j) T2(j,l) = δ
//   Σ_(k=l)^n Σ_(j=k)^n Σ_(m=l)^k C(n,j) T2(j,k) T1(k,m) D(m,l) = δ
// and the upper-summation pair
//   a_n = Σ_(k=n)^M Σ_(l=n)^k C(k,l) T2(l,n) c_k  <=>  c_n = Σ_(k=n)^M Σ_(l=n)^k T1(k,l) D(l,n) a_k.
struct Display {
  std::string sequence;
  Entry A, B, C, D;
};

std::optional<Witness> evaluate_display(const Display& d, const LowerTriangular& T1, const LowerTriangular& T2,
                                        int n_max, RationalSource& rng) {
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 0; l <= n; ++l) {
      const Rational want = (n == l) ? 1 : 0;
      Rational first;
      Rational second;
      for (int k = l; k <= n; ++k) {
        for (int m = k; m <= n; ++m) {
          for (int j = l; j <= k; ++j) first += T1.at(n, m) * d.A(m, k) * d.B(k, j) * T2.at(j, l);
        }
        for (int j = k; j <= n; ++j) {
          for (int m = l; m <= k; ++m) second += d.C(n, j) * T2.at(j, k) * T1.at(k, m) * d.D(m, l);
        }
      }
      if (first != want) return witness(n, l, first, want, "T1 A B T2 triple sum");
      if (second != want) return witness(n, l, second, want, "C T2 T1 D triple sum");
    }
  }
  const int M = n_max;
  for (int trial = 0; trial < 8; ++trial) {
    const auto c = rng.vector(M);
    std::vector<Rational> a(c.size());
    for (int n = 0; n <= M; ++n) {
      for (int k = n; k <= M; ++k) {
        for (int l = n; l <= k; ++l) a[static_cast<std::size_t>(n)] += d.C(k, l) * T2.at(l, n) * c[static_cast<std::size_t>(k)];
      }
    }
    std::vector<Rational> back(c.size());
    for (int n = 0; n <= M; ++n) {
      for (int k = n; k <= M; ++k) {
        for (int l = n; l <= k; ++l) back[static_cast<std::size_t>(n)] += T1.at(k, l) * d.D(l, n) * a[static_cast<std::size_t>(k)];
      }
    }
    if (auto w = first_vector_mismatch(back, c, trial, "upper-summation inverse pair")) return w;
  }
  return std::nullopt;
}

}  // namespace

std::vector<IdentityCheck> check_quadruple_sums(const Params& params, int n_max, std::uint64_t seed) {
  n_max = std::min(n_max, 6);
  const auto S1 = classical(FamilyId::S1, n_max);
  const auto S2 = classical(FamilyId::S2, n_max);
  const auto T1 = classical(FamilyId::T1, n_max);
  const auto T2 = classical(FamilyId::T2, n_max);
  const auto L = classical(FamilyId::Lah, n_max);
  const auto lam_it = params.find("lambda");
  const Rational lam = lam_it == params.end() ? default_params().at("lambda") : lam_it->second;

  const auto s1 = [S1](Rational w) { return [S1, w](int a, int b) -> Rational { return power(w, a - b) * S1->at(a, b); }; };
  const auto s2 = [S2](Rational w) { return [S2, w](int a, int b) -> Rational { return power(w, a - b) * S2->at(a, b); }; };
  const Entry t1 = [T1](int a, int b) -> Rational { return T1->at(a, b); };
  const Entry t2 = [T2](int a, int b) -> Rational { return T2->at(a, b); };
  const Entry lah = [L](int a, int b) -> Rational { return L->at(a, b); };
  const Entry lah_diff_sign = [L](int a, int b) -> Rational { return sign(a - b) * L->at(a, b); };
  const Entry lah_col_sign = [L](int a, int b) -> Rational { return sign(b) * L->at(a, b); };

  // The rising_lambda upper pair is printed with an outer sum over k = 0..n;
  // it is evaluated here with the k = n..m range used by the rising example.
  const std::vector<Display> displays = {
      {"rising", s2(-1), s1(-1), s1(-1), s2(-1)},
      {"rising_lambda", s2(-lam), s1(-lam), s1(-lam), s2(-lam)},
      {"central_bell", t1, t2, t2, t1},
      {"lah_bell", lah_diff_sign, lah, lah, lah_diff_sign},
      {"laguerre", lah, lah_diff_sign, lah_col_sign, lah_col_sign},
  };

  std::vector<IdentityCheck> out;
  std::uint64_t salt = 0;
  for (const auto& d : displays) {
    RationalSource rng(seed + (++salt));
    out.push_back(guarded(make("quadruple_sums", d.sequence, n_max),
                          [&]() { return evaluate_display(d, *T1, *T2, n_max, rng); }));
  }
  return out;
}

}  // namespace cfnum
