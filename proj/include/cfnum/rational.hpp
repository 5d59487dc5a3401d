#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace cfnum {

/// Exact rational scalar backed by GMP; always canonical (lowest terms, q > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Named rational parameters (λ, r, s, a) attached to families and sequences.
using Params = std::map<std::string, Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Parses an optional sign, digits, and an optional "/digits" with nonzero denominator.
/// Throws UsageError on anything else.
Rational parse_rational(std::string_view text);

/// Nonnegative rational square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// p/q in canonical form (q != 0).
Rational ratio(long p, long q);

Rational factorial(long n);

/// C(n, k) for integer n ≥ 0; zero when k < 0 or k > n.
Rational binomial(long n, long k);

/// base^e for any integer e (base must be nonzero when e < 0).
Rational power(const Rational& base, long e);

/// x (x - step) (x - 2 step) ... (x - (n-1) step); 1 when n = 0.
Rational falling_factorial(const Rational& x, long n, const Rational& step = 1);

std::string params_label(const Params& params);

}  // namespace cfnum
