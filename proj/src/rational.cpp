#include "cfnum/rational.hpp"

#include <cctype>

#include "cfnum/errors.hpp"

namespace cfnum {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw UsageError("zero denominator in rational: '" + std::string(text) + "'");
  Rational out(negative ? Integer(-p) : p, q);
  out.canonicalize();
  return out;
}

Rational ratio(long p, long q) {
  if (q == 0) throw DomainError("ratio: zero denominator");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& p = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(p), sqrt(d));
  root.canonicalize();
  return root;
}

Rational factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational power(const Rational& base, long e) {
  Rational out(1);
  Rational b = e < 0 ? Rational(1 / base) : base;
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (m != 0) {
    if (m & 1UL) out *= b;
    m >>= 1;
    if (m != 0) b *= b;
  }
  return out;
}

Rational falling_factorial(const Rational& x, long n, const Rational& step) {
  Rational out(1);
  for (long i = 0; i < n; ++i) out *= x - i * step;
  return out;
}

std::string params_label(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ',';
    out += name + '=' + to_string(value);
  }
  return out;
}

}  // namespace cfnum
