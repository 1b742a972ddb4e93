#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP backed),
// plus the classical integer quantities used throughout the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compsum {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational reciprocal(const BigInt& d) { return make_rational(BigInt(1), d); }
inline Rational ratio(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("empty integer");
    for (char ch : digits)
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    std::string str(s.front() == '+' ? s.substr(1) : s);
    return BigInt(str, 10);
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(trim(text.substr(0, slash)));
  BigInt den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return make_rational(num, den);
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(10); }
inline std::string to_string(const BigInt& z) { return z.get_str(10); }

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// C(n, k); zero when k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// C(n, k) for signed n; zero outside 0 <= k <= n.
inline BigInt binomial_signed(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
inline Rational pochhammer(const Rational& x, unsigned n) {
  Rational out(1);
  for (unsigned i = 0; i < n; ++i) out *= x + i;
  return out;
}

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.
inline Rational binomial_rational(const Rational& x, unsigned k) {
  Rational out(1);
  for (unsigned i = 0; i < k; ++i) out *= (x - i) / Rational(i + 1);
  return out;
}

inline BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace compsum
