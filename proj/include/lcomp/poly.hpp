#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lcomp/rational.hpp"

namespace lcomp {

/// Dense univariate polynomial over a field-like scalar, lowest degree first.
/// The zero polynomial has no coefficients.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const T& constant) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(constant)) c_.push_back(constant);
  }

  static Poly monomial(const T& coeff, int degree) {
    std::vector<T> c(static_cast<size_t>(degree) + 1, T(0));
    c.back() = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0);
  }
  const T& leading() const { return c_.back(); }

  T operator()(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v = s * v;
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero_poly()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<T> rem = a.c_;
    std::vector<T> quot(a.c_.size() - b.c_.size() + 1, T(0));
    T inv_lead = T(1) / b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
      if (is_zero(rem[i])) continue;
      T q = rem[i] * inv_lead;
      quot[i - b.degree()] = q;
      for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] = rem[i - b.degree() + j] - q * b.c_[j];
    }
    rem.resize(static_cast<size_t>(b.degree()));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (c_.empty()) return *this;
    return (T(1) / leading()) * *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1, T(0));
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (is_zero(c_[i])) continue;
      std::string cs = scalar_string(c_[i]);
      bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      if (negative) cs = cs.substr(1);
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      first = false;
      if (compound) cs = "(" + cs + ")";
      if (i == 0) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  static std::string scalar_string(const Rational& r) { return r.get_str(); }
  template <class U>
  static std::string scalar_string(const U& u) {
    return u.to_string();
  }
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero_poly()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns monic g with s*a + t*b = g.
template <class T>
Poly<T> poly_xgcd(const Poly<T>& a, const Poly<T>& b, Poly<T>& s, Poly<T>& t) {
  Poly<T> r0 = a, r1 = b, s0(T(1)), s1, t0, t1(T(1));
  while (!r1.is_zero_poly()) {
    auto [q, r] = Poly<T>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    Poly<T> nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.is_zero_poly()) {
    s = s0;
    t = t0;
    return r0;
  }
  T inv = T(1) / r0.leading();
  s = inv * s0;
  t = inv * t0;
  return inv * r0;
}

template <class T>
Poly<T> poly_pow(const Poly<T>& base, int e) {
  Poly<T> result(T(1)), b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    b = b * b;
    e >>= 1;
  }
  return result;
}

using QPoly = Poly<Rational>;

/// Convenience builder from small integer coefficients, lowest degree first.
inline QPoly qpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
  return os << p.to_string();
}

/// n-th cyclotomic polynomial.
inline QPoly cyclotomic(int n) {
  QPoly num = QPoly::monomial(Rational(1), n) - QPoly(Rational(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = num / cyclotomic(d);
  return num;
}

}  // namespace lcomp
