#pragma once

// Small hand-rolled generators for the property tests.

#include <random>
#include <vector>

#include "cfnum/polynomial.hpp"
#include "cfnum/rational.hpp"
#include "cfnum/series.hpp"

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  cfnum::Rational rational(long span = 9) {
    return cfnum::ratio(integer(-span, span), integer(1, span));
  }

  cfnum::Rational nonzero(long span = 9) {
    for (;;) {
      auto q = rational(span);
      if (q != 0) return q;
    }
  }

  // c_0 = 0, c_1 != 0
  cfnum::Series delta(int order) {
    std::vector<cfnum::Rational> c(static_cast<std::size_t>(order) + 1);
    c[1] = nonzero();
    for (int i = 2; i <= order; ++i) c[static_cast<std::size_t>(i)] = rational();
    return cfnum::Series(order, c);
  }

  // c_0 = 1
  cfnum::Series unit(int order) {
    std::vector<cfnum::Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int i = 1; i <= order; ++i) c[static_cast<std::size_t>(i)] = rational();
    return cfnum::Series(order, c);
  }

  cfnum::Polynomial polynomial(int degree) {
    std::vector<cfnum::Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = rational();
    c.back() = nonzero();
    return cfnum::Polynomial(c);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
