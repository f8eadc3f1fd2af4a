#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcomp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation receives mathematically invalid input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised on caller mistakes: mismatched sizes, wrong shapes, bad arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed a configured size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Small-integer helpers used throughout the modular-symbol code.
inline int64_t mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline int64_t gcd64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Extended gcd: returns g and sets x, y with a*x + b*y = g >= 0.
inline int64_t xgcd64(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline int64_t inverse_mod(int64_t a, int64_t m) {
  if (m == 1) return 0;
  int64_t x, y;
  if (xgcd64(mod(a, m), m, x, y) != 1) throw DomainError("inverse_mod: not a unit");
  return mod(x, m);
}

inline int64_t power_mod(int64_t a, int64_t e, int64_t m) {
  int64_t result = 1 % m;
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) result = static_cast<int64_t>((__int128)result * a % m);
    a = static_cast<int64_t>((__int128)a * a % m);
    e >>= 1;
  }
  return result;
}

inline int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// p-adic valuation of a nonzero integer.
inline int valuation(int64_t n, int64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline int64_t euler_phi(int64_t n) {
  int64_t result = n;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace lcomp
