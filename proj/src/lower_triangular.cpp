#include "cfnum/lower_triangular.hpp"

#include <algorithm>
#include <string>

#include "cfnum/errors.hpp"

namespace cfnum {

LowerTriangular::LowerTriangular(int n_max) {
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
}

LowerTriangular LowerTriangular::identity(int n_max) {
  LowerTriangular out(n_max);
  for (int n = 0; n <= n_max; ++n) out.set(n, n, 1);
  return out;
}

Rational LowerTriangular::at(int n, int k) const {
  if (n < 0 || n > n_max() || k < 0 || k > n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void LowerTriangular::set(int n, int k, Rational value) {
  if (n < 0 || n > n_max() || k < 0 || k > n) {
    throw UsageError("triangle index (" + std::to_string(n) + "," + std::to_string(k) +
                     ") out of range");
  }
  rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(value);
}

LowerTriangular LowerTriangular::truncated(int m) const {
  LowerTriangular out(std::min(m, n_max()));
  for (int n = 0; n <= out.n_max(); ++n) out.rows_[static_cast<std::size_t>(n)] = rows_[static_cast<std::size_t>(n)];
  return out;
}

LowerTriangular multiply(const LowerTriangular& a, const LowerTriangular& b) {
  const int n_max = std::min(a.n_max(), b.n_max());
  LowerTriangular out(n_max);
  Rational acc;
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 0; l <= n; ++l) {
      acc = 0;
      for (int k = l; k <= n; ++k) {
        const Rational& x = a.row(n)[static_cast<std::size_t>(k)];
        if (sgn(x) != 0) acc += x * b.row(k)[static_cast<std::size_t>(l)];
      }
      out.set(n, l, acc);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> first_difference(const LowerTriangular& a,
                                                    const LowerTriangular& b) {
  const int n_max = std::max(a.n_max(), b.n_max());
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (a.at(n, k) != b.at(n, k)) return std::make_pair(n, k);
    }
  }
  return std::nullopt;
}

}  // namespace cfnum
