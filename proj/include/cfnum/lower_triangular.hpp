#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cfnum/rational.hpp"

namespace cfnum {

/// Lower-triangular table T(n, k), 0 <= k <= n <= n_max. Reads outside the
/// triangle (k < 0, k > n, n > n_max) return zero.
class LowerTriangular {
 public:
  LowerTriangular() = default;
  explicit LowerTriangular(int n_max);

  static LowerTriangular identity(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  Rational at(int n, int k) const;
  void set(int n, int k, Rational value);
  const std::vector<Rational>& row(int n) const { return rows_[static_cast<std::size_t>(n)]; }

  /// The leading (m+1) x (m+1) block.
  LowerTriangular truncated(int m) const;

  friend bool operator==(const LowerTriangular& a, const LowerTriangular& b) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// (A B)(n, l) = Σ_k A(n, k) B(k, l), over the common range.
LowerTriangular multiply(const LowerTriangular& a, const LowerTriangular& b);

/// First (n, k) in row-major order where the tables differ.
std::optional<std::pair<int, int>> first_difference(const LowerTriangular& a,
                                                    const LowerTriangular& b);

}  // namespace cfnum
