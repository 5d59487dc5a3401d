#include "cfnum/closed_forms.hpp"

#include <functional>

#include "cfnum/assoc.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/triangles.hpp"

namespace cfnum {

namespace {

using Entry = std::function<Rational(int n, int k)>;

LowerTriangular tabulate(int n_max, const Entry& f) {
  LowerTriangular out(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) out.set(n, k, f(n, k));
  }
  return out;
}

// Σ_(l=lo)^(hi) term(l)
Rational sum(int lo, int hi, const std::function<Rational(int)>& term) {
  Rational acc;
  for (int l = lo; l <= hi; ++l) acc += term(l);
  return acc;
}

Rational sign(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

struct Tables {
  int n_max;
  std::shared_ptr<const LowerTriangular> s1, s2, t1, t2, lah, l1c, l2c, tl1, tl2;

  explicit Tables(int n)
      : n_max(n),
        s1(classical(FamilyId::S1, n)),
        s2(classical(FamilyId::S2, n)),
        t1(classical(FamilyId::T1, n)),
        t2(classical(FamilyId::T2, n)),
        lah(classical(FamilyId::Lah, n)),
        l1c(classical(FamilyId::L1c, n)),
        l2c(classical(FamilyId::L2c, n)),
        tl1(classical(FamilyId::TL1, n)),
        tl2(classical(FamilyId::TL2, n)) {}

  std::shared_ptr<const LowerTriangular> lambda_family(FamilyId id, const Rational& lam) const {
    return cached_triangle(TriangleFamily::make(id, {{"lambda", lam}}), n_max);
  }
};

Rational param(const PolySequenceSpec& spec, const std::string& key) {
  auto it = spec.params().find(key);
  if (it == spec.params().end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

std::vector<ClosedForm> closed_forms_t2(const PolySequenceSpec& spec, int n_max) {
  const Tables c(n_max);
  const auto& S1 = *c.s1;
  const auto& S2 = *c.s2;
  const auto& T2 = *c.t2;
  const auto& L = *c.lah;
  const std::string& name = spec.name();
  std::vector<ClosedForm> out;
  const auto add = [&](std::string label, const Entry& f) { out.push_back({std::move(label), tabulate(n_max, f)}); };

  if (name == "monomials") {
    add("T2(n,k)", [&](int n, int k) -> Rational { return T2.at(n, k); });
  } else if (name == "falling_lambda") {
    const Rational lam = param(spec, "lambda");
    const auto T2l = c.lambda_family(FamilyId::T2Lambda, lam);
    add("T2l(n,k)", [&](int n, int k) -> Rational { return T2l->at(n, k); });
    add("sum lambda^(n-l) S1(n,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return power(lam, n - l) * S1.at(n, l) * T2.at(l, k); });
    });
  } else if (name == "rising") {
    add("sum (-1)^(n-l) S1(n,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return sign(n - l) * S1.at(n, l) * T2.at(l, k); });
    });
  } else if (name == "rising_lambda") {
    const Rational lam = param(spec, "lambda");
    add("sum (-lambda)^(n-l) S1(n,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return power(-lam, n - l) * S1.at(n, l) * T2.at(l, k); });
    });
  } else if (name == "tlb1") {
    add("L2c(n,k)", [&](int n, int k) -> Rational { return c.l2c->at(n, k); });
  } else if (name == "tlb2") {
    add("sum T2(l,k) TL2(n,l)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T2.at(l, k) * c.tl2->at(n, l); });
    });
  } else if (name == "central_bell") {
    add("sum T2(n,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T2.at(n, l) * T2.at(l, k); });
    });
  } else if (name == "degenerate_central_bell") {
    const auto T2l = c.lambda_family(FamilyId::T2Lambda, param(spec, "lambda"));
    add("sum T2(l,k) T2l(n,l)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T2.at(l, k) * T2l->at(n, l); });
    });
  } else if (name == "central_factorial_lambda") {
    const auto R1l = c.lambda_family(FamilyId::R1Lambda, param(spec, "lambda"));
    add("sum T2(l,k) R1l(n,l)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T2.at(l, k) * R1l->at(n, l); });
    });
  } else if (name == "lah_bell") {
    add("sum T2(l,k) L(n,l)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T2.at(l, k) * L.at(n, l); });
    });
  } else if (name == "degenerate_lah_bell") {
    const Rational lam = param(spec, "lambda");
    add("sum sum lambda^(m-l) L(n,m) S1(m,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(l, n, [&](int m) -> Rational { return power(lam, m - l) * L.at(n, m) * S1.at(m, l) * T2.at(l, k); });
      });
    });
  } else if (name == "bell") {
    add("sum S2(n,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return S2.at(n, l) * T2.at(l, k); });
    });
  } else if (name == "partially_degenerate_bell") {
    const auto S2l = c.lambda_family(FamilyId::S2Lambda, param(spec, "lambda"));
    add("sum S2l(n,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return S2l->at(n, l) * T2.at(l, k); });
    });
  } else if (name == "fully_degenerate_bell") {
    const Rational lam = param(spec, "lambda");
    const auto S2l = c.lambda_family(FamilyId::S2Lambda, lam);
    add("sum sum lambda^(m-l) S2l(n,m) S1(m,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(l, n, [&](int m) -> Rational { return power(lam, m - l) * S2l->at(n, m) * S1.at(m, l) * T2.at(l, k); });
      });
    });
  } else if (name == "mittag_leffler") {
    add("sum sum 2^m L(n,m) S1(m,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(l, n, [&](int m) -> Rational { return power(Rational(2), m) * L.at(n, m) * S1.at(m, l) * T2.at(l, k); });
      });
    });
  } else if (name == "laguerre") {
    add("sum (-1)^l L(n,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return sign(l) * L.at(n, l) * T2.at(l, k); });
    });
  } else if (name == "bernoulli") {
    const auto B = number_sequence(NumberSequenceId::Bernoulli, n_max);
    add("sum T2(l,k) C(n,l) B_(n-l)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T2.at(l, k) * binomial(n, l) * B[static_cast<std::size_t>(n - l)]; });
    });
    add("sum C(n,l) T2(n-l,k) B_l", [&](int n, int k) -> Rational {
      return sum(0, n - k, [&](int l) -> Rational { return binomial(n, l) * T2.at(n - l, k) * B[static_cast<std::size_t>(l)]; });
    });
  } else if (name == "euler") {
    const auto E = number_sequence(NumberSequenceId::Euler, n_max);
    add("sum T2(l,k) C(n,l) E_(n-l)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T2.at(l, k) * binomial(n, l) * E[static_cast<std::size_t>(n - l)]; });
    });
    add("sum C(n,l) T2(n-l,k) E_l", [&](int n, int k) -> Rational {
      return sum(0, n - k, [&](int l) -> Rational { return binomial(n, l) * T2.at(n - l, k) * E[static_cast<std::size_t>(l)]; });
    });
  } else if (name == "gould_hopper") {
    const Rational r = param(spec, "r");
    const Rational s = param(spec, "s");
    add("sum sum C(n,m) r^l (s)_(n-m) S1(m,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(l, n, [&](int m) -> Rational {
          return binomial(n, m) * power(r, l) * falling_factorial(s, n - m) * S1.at(m, l) * T2.at(l, k);
        });
      });
    });
  } else if (name == "bernoulli2") {
    const auto b = number_sequence(NumberSequenceId::Bernoulli2nd, n_max);
    add("sum sum C(n,m) b_(n-m) S1(m,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(l, n, [&](int m) -> Rational {
          return binomial(n, m) * b[static_cast<std::size_t>(n - m)] * S1.at(m, l) * T2.at(l, k);
        });
      });
    });
  } else if (name == "poisson_charlier") {
    const Rational a = param(spec, "a");
    add("sum sum C(n,m) (-1)^(n-m) a^(-m) S1(m,l) T2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(l, n, [&](int m) -> Rational {
          return binomial(n, m) * sign(n - m) * power(a, -m) * S1.at(m, l) * T2.at(l, k);
        });
      });
    });
  } else if (name == "bernoulli_product") {
    const auto B = number_sequence(NumberSequenceId::Bernoulli, n_max);
    // (1/k!) <(e^(t/2) - e^(-t/2))^k | B_m(x)>
    const auto pairing = [&](int m, int k) -> Rational {
      return sum(0, m - k, [&](int l) -> Rational {
        return binomial(m, l) * T2.at(m - l, k) * B[static_cast<std::size_t>(l)];
      });
    };
    add("reduction through B_m(x)", [&](int n, int k) -> Rational {
      const Rational head = sum(0, n - 2, [&](int m) -> Rational {
        return binomial(n + 2, m) * B[static_cast<std::size_t>(n - m)] * pairing(m, k);
      });
      return ratio(2, n + 2) * head + (n + 1) * pairing(n, k);
    });
  } else {
    throw UsageError("no closed form registered for " + name);
  }
  return out;
}

std::vector<ClosedForm> closed_forms_t1(const PolySequenceSpec& spec, int n_max) {
  const Tables c(n_max);
  const auto& S1 = *c.s1;
  const auto& S2 = *c.s2;
  const auto& T1 = *c.t1;
  const auto& L = *c.lah;
  const std::string& name = spec.name();
  std::vector<ClosedForm> out;
  const auto add = [&](std::string label, const Entry& f) { out.push_back({std::move(label), tabulate(n_max, f)}); };

  if (name == "monomials") {
    add("T1(n,k)", [&](int n, int k) -> Rational { return T1.at(n, k); });
  } else if (name == "falling_lambda") {
    const auto T1l = c.lambda_family(FamilyId::T1Lambda, param(spec, "lambda"));
    add("T1l(n,k)", [&](int n, int k) -> Rational { return T1l->at(n, k); });
  } else if (name == "rising") {
    add("sum (-1)^(l-k) T1(n,l) S2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return sign(l - k) * T1.at(n, l) * S2.at(l, k); });
    });
  } else if (name == "rising_lambda") {
    const Rational lam = param(spec, "lambda");
    add("sum (-lambda)^(l-k) T1(n,l) S2(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return power(-lam, l - k) * T1.at(n, l) * S2.at(l, k); });
    });
  } else if (name == "tlb1") {
    add("L1c(n,k)", [&](int n, int k) -> Rational { return c.l1c->at(n, k); });
  } else if (name == "tlb2") {
    add("sum T1(n,l) TL1(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T1.at(n, l) * c.tl1->at(l, k); });
    });
  } else if (name == "central_bell") {
    add("sum T1(n,l) T1(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T1.at(n, l) * T1.at(l, k); });
    });
  } else if (name == "degenerate_central_bell") {
    const auto T1l = c.lambda_family(FamilyId::T1Lambda, param(spec, "lambda"));
    add("sum T1(n,l) T1l(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T1.at(n, l) * T1l->at(l, k); });
    });
  } else if (name == "central_factorial_lambda") {
    const auto R2l = c.lambda_family(FamilyId::R2Lambda, param(spec, "lambda"));
    add("sum T1(n,l) R2l(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T1.at(n, l) * R2l->at(l, k); });
    });
  } else if (name == "lah_bell") {
    add("sum (-1)^(l-k) T1(n,l) L(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return sign(l - k) * T1.at(n, l) * L.at(l, k); });
    });
  } else if (name == "degenerate_lah_bell") {
    const Rational lam = param(spec, "lambda");
    add("sum sum (-1)^(m-k) lambda^(l-m) T1(n,l) S2(l,m) L(m,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(k, l, [&](int m) -> Rational {
          return sign(m - k) * power(lam, l - m) * T1.at(n, l) * S2.at(l, m) * L.at(m, k);
        });
      });
    });
  } else if (name == "bell") {
    add("sum T1(n,l) S1(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T1.at(n, l) * S1.at(l, k); });
    });
  } else if (name == "partially_degenerate_bell") {
    const auto S1l = c.lambda_family(FamilyId::S1Lambda, param(spec, "lambda"));
    add("sum T1(n,l) S1l(l,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return T1.at(n, l) * S1l->at(l, k); });
    });
  } else if (name == "fully_degenerate_bell") {
    const Rational lam = param(spec, "lambda");
    const auto S1l = c.lambda_family(FamilyId::S1Lambda, lam);
    add("sum sum lambda^(l-m) T1(n,l) S2(l,m) S1l(m,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(k, l, [&](int m) -> Rational {
          return power(lam, l - m) * T1.at(n, l) * S2.at(l, m) * S1l->at(m, k);
        });
      });
    });
  } else if (name == "mittag_leffler") {
    add("sum sum (-1)^(m-k) 2^(-m) T1(n,l) S2(l,m) L(m,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(k, l, [&](int m) -> Rational {
          return sign(m - k) * power(Rational(2), -m) * T1.at(n, l) * S2.at(l, m) * L.at(m, k);
        });
      });
    });
  } else if (name == "laguerre") {
    add("(-1)^k sum T1(n,l) L(l,k)", [&](int n, int k) -> Rational {
      return sign(k) * sum(k, n, [&](int l) -> Rational { return T1.at(n, l) * L.at(l, k); });
    });
  } else if (name == "bernoulli") {
    add("sum C(l+1,k) T1(n,l) / (l+1)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational { return ratio(1, l + 1) * binomial(l + 1, k) * T1.at(n, l); });
    });
  } else if (name == "euler") {
    add("(1/2) sum C(l,k) T1(n,l) + (1/2) T1(n,k)", [&](int n, int k) -> Rational {
      const Rational s = sum(k, n, [&](int l) -> Rational { return binomial(l, k) * T1.at(n, l); });
      return (s + T1.at(n, k)) / 2;
    });
  } else if (name == "gould_hopper") {
    const Rational r = param(spec, "r");
    const Rational s = param(spec, "s");
    add("sum sum C(l,m) r^(-l) (-s)^(l-m) T1(n,l) S2(m,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(k, l, [&](int m) -> Rational {
          return binomial(l, m) * power(r, -l) * power(-s, l - m) * T1.at(n, l) * S2.at(m, k);
        });
      });
    });
  } else if (name == "bernoulli2") {
    const auto B = number_sequence(NumberSequenceId::Bernoulli, n_max);
    add("sum sum C(l,m) B_(l-m) T1(n,l) S2(m,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(k, l, [&](int m) -> Rational {
          return binomial(l, m) * B[static_cast<std::size_t>(l - m)] * T1.at(n, l) * S2.at(m, k);
        });
      });
    });
  } else if (name == "poisson_charlier") {
    const Rational a = param(spec, "a");
    const auto bel = number_sequence(NumberSequenceId::Bell, n_max, a);
    add("sum sum a^k C(l,m) Bel_(l-m)(a) T1(n,l) S2(m,k)", [&](int n, int k) -> Rational {
      return sum(k, n, [&](int l) -> Rational {
        return sum(0, l, [&](int m) -> Rational {
          return power(a, k) * binomial(l, m) * bel[static_cast<std::size_t>(l - m)] * T1.at(n, l) * S2.at(m, k);
        });
      });
    });
  } else if (name == "bernoulli_product") {
    out.push_back({"upper-triangular solve in the Bernoulli basis", bernoulli_product_t1(n_max)});
  } else {
    throw UsageError("no closed form registered for " + name);
  }
  return out;
}

LowerTriangular fully_degenerate_bell_t1_with_s1(const Rational& lambda, int n_max) {
  const auto T1 = classical(FamilyId::T1, n_max);
  const auto S1 = classical(FamilyId::S1, n_max);
  const auto S1l = cached_triangle(TriangleFamily::make(FamilyId::S1Lambda, {{"lambda", lambda}}), n_max);
  return tabulate(n_max, [&](int n, int k) -> Rational {
    return sum(k, n, [&](int l) -> Rational {
      return sum(k, l, [&](int m) -> Rational {
        return power(lambda, l - m) * T1->at(n, l) * S1->at(l, m) * S1l->at(m, k);
      });
    });
  });
}

}  // namespace cfnum
