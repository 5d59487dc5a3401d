#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cfnum/lower_triangular.hpp"
#include "cfnum/rational.hpp"
#include "cfnum/series.hpp"

namespace cfnum {

enum class FamilyId {
  S1, S2, S1Lambda, S2Lambda,
  T1, T2, T1Lambda, T2Lambda,
  R1Lambda, R2Lambda,
  Lah, L1c, L2c, TL1, TL2,
  GouldHopper,
};

struct TriangleFamily {
  FamilyId id = FamilyId::T2;
  /// "lambda" for the λ-families, "r" and "s" for GouldHopper; nothing else.
  Params params;

  /// Validates and keeps only the parameters the family uses.
  static TriangleFamily make(FamilyId id, const Params& params = {});

  Rational param(const std::string& name) const;
  friend bool operator==(const TriangleFamily&, const TriangleFamily&) = default;
};

const std::vector<FamilyId>& all_families();
/// CLI key: s1, s2, s1l, s2l, t1, t2, t1l, t2l, r1l, r2l, lah, l1c, l2c, tl1, tl2, gh.
std::string family_key(FamilyId id);
FamilyId family_from_key(std::string_view key);
/// Parameter names the family requires.
std::vector<std::string> family_param_names(FamilyId id);

struct Triangle {
  TriangleFamily family;
  LowerTriangular entries;
};

/// Weight w and base b with T(n,k) = n! [t^n] w b^k / k!.
struct ColumnGenerator {
  Series weight;
  Series base;
};

ColumnGenerator family_generator(const TriangleFamily& family, int order);

/// Reads columns off a weight/base pair.
LowerTriangular columns_from_generator(const ColumnGenerator& gen, int n_max);

/// Series route. order < 0 selects the default 2 n_max + 2.
Triangle triangle_by_series(const TriangleFamily& family, int n_max, int order = -1);

/// Basis conversion, closed formulas, and matrix products; no series.
Triangle triangle_by_algebra(const TriangleFamily& family, int n_max);

/// Process-wide memo of triangle_by_series, keyed by (family, params, n_max).
std::shared_ptr<const LowerTriangular> cached_triangle(const TriangleFamily& family, int n_max);

/// Classical, parameter-free families (S1, S2, T1, T2, Lah, L1c, L2c, TL1, TL2).
std::shared_ptr<const LowerTriangular> classical(FamilyId id, int n_max);

enum class NumberSequenceId { Bernoulli, Euler, Bernoulli2nd, Bell, CentralBell };

/// Values a_0..a_n_max as EGF coefficients. x0 is the argument of the Bell
/// polynomials and is ignored elsewhere.
std::vector<Rational> number_sequence(NumberSequenceId id, int n_max, const Rational& x0 = 1);

}  // namespace cfnum
