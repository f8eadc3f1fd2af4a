#include <algorithm>
#include <random>

#include "lcomp/factor.hpp"

namespace lcomp {

namespace {

using ZPoly = std::vector<Integer>;
using FpPoly = std::vector<int64_t>;

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^31, coefficients in [0, p).

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int64_t mulmod(int64_t a, int64_t b, int64_t p) { return static_cast<int64_t>((__int128)a * b % p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(c);
  return c;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

void fp_divmod(const FpPoly& a, const FpPoly& b, int64_t p, FpPoly& q, FpPoly& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  int64_t inv = inverse_mod(b.back(), p);
  for (size_t i = a.size(); i-- >= b.size();) {
    int64_t c = mulmod(r[i], inv, p);
    q[i - b.size() + 1] = c;
    if (!c) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] = mod(r[i - b.size() + 1 + j] - mulmod(c, b[j], p), p);
  }
  trim(q);
  trim(r);
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b, int64_t p) {
  FpPoly q, r;
  fp_divmod(a, b, p, q, r);
  return r;
}

FpPoly fp_monic(FpPoly a, int64_t p) {
  if (a.empty()) return a;
  int64_t inv = inverse_mod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

/// s, t with s a + t b = gcd(a, b) (monic).
FpPoly fp_xgcd(const FpPoly& a, const FpPoly& b, int64_t p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    fp_divmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly ns = fp_sub(s0, fp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
    FpPoly nt = fp_sub(t0, fp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  int64_t inv = inverse_mod(r0.back(), p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  s = s0;
  t = t0;
  return fp_monic(r0, p);
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& m, int64_t p) {
  FpPoly result{1};
  base = fp_rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(fp_mul(result, base, p), m, p);
    base = fp_rem(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_derivative(const FpPoly& a, int64_t p) {
  FpPoly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(static_cast<int64_t>(i) % p, a[i], p));
  trim(d);
  return d;
}

FpPoly to_fp(const ZPoly& a, int64_t p) {
  FpPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Integer r = a[i] % p;
    if (r < 0) r += p;
    out[i] = r.get_si();
  }
  trim(out);
  return out;
}

/// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f, int64_t p) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly x{0, 1};
  FpPoly h = x;
  int d = 0;
  while (2 * (d + 1) <= static_cast<int>(f.size()) - 1) {
    ++d;
    h = fp_powmod(h, Integer(p), f, p);
    FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      FpPoly q, r;
      fp_divmod(f, g, p, q, r);
      f = q;
      h = fp_rem(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(fp_monic(f, p), static_cast<int>(f.size()) - 1);
  return out;
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
void equal_degree(const FpPoly& f, int d, int64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<int64_t> dist(0, p - 1);
  while (true) {
    FpPoly a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() < 2) continue;
    FpPoly g = fp_gcd(f, a, p);
    if (g.size() == 1) g = fp_gcd(f, fp_sub(fp_powmod(a, e, f, p), FpPoly{1}, p), p);
    if (g.size() > 1 && g.size() < f.size()) {
      FpPoly q, r;
      fp_divmod(f, g, p, q, r);
      equal_degree(g, d, p, rng, out);
      equal_degree(fp_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/m)[x] for Hensel lifting.

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zm_reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
  return a;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return zm_reduce(std::move(c), m);
}

ZPoly zm_add(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return zm_reduce(std::move(a), m);
}

ZPoly zm_sub(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zm_reduce(std::move(a), m);
}

/// Division by a monic polynomial modulo m.
void zm_divmod(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, Integer(0));
  for (size_t i = a.size(); i-- >= b.size();) {
    Integer c = r[i] % m;
    if (c < 0) c += m;
    q[i - b.size() + 1] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] -= c * b[j];
    for (size_t j = 0; j < b.size(); ++j) {
      Integer& x = r[i - b.size() + 1 + j];
      x %= m;
      if (x < 0) x += m;
    }
  }
  q = zm_reduce(q, m);
  r = zm_reduce(r, m);
}

ZPoly from_fp(const FpPoly& a) {
  ZPoly out;
  for (auto c : a) out.emplace_back(static_cast<long>(c));
  return out;
}

/// Lifts f = g h mod p (h monic, lc g = lc f) to modulus `target` (a power of p).
void hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, int64_t p, const Integer& target) {
  FpPoly s0, t0;
  FpPoly gcd = fp_xgcd(to_fp(g, p), to_fp(h, p), p, s0, t0);
  if (gcd.size() != 1) throw ConsistencyError("hensel_lift: factors not coprime mod p");
  ZPoly s = from_fp(s0), t = from_fp(t0);
  Integer m(p);
  while (m < target) {
    Integer m2 = m * m;
    if (m2 > target) m2 = target;
    ZPoly e = zm_sub(zm_reduce(f, m2), zm_mul(g, h, m2), m2);
    ZPoly q, r;
    zm_divmod(zm_mul(s, e, m2), h, m2, q, r);
    ZPoly g2 = zm_add(zm_add(g, zm_mul(t, e, m2), m2), zm_mul(q, g, m2), m2);
    ZPoly h2 = zm_add(h, r, m2);
    ZPoly b = zm_sub(zm_add(zm_mul(s, g2, m2), zm_mul(t, h2, m2), m2), ZPoly{Integer(1)}, m2);
    ZPoly c, d;
    zm_divmod(zm_mul(s, b, m2), h2, m2, c, d);
    s = zm_sub(s, d, m2);
    t = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c, g2, m2), m2);
    g = g2;
    h = h2;
    m = m2;
  }
}

/// Lifts the monic factors `fs` of f mod p to monic factors mod target.
void multi_lift(const ZPoly& f, const std::vector<FpPoly>& fs, int64_t p, const Integer& target,
                std::vector<ZPoly>& out) {
  if (fs.size() == 1) {
    // Monic associate of f modulo target.
    Integer inv;
    Integer lc = f.back() % target;
    if (lc < 0) lc += target;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
    ZPoly m = f;
    for (auto& c : m) c *= inv;
    out.push_back(zm_reduce(m, target));
    return;
  }
  size_t half = fs.size() / 2;
  std::vector<FpPoly> left(fs.begin(), fs.begin() + half), right(fs.begin() + half, fs.end());
  FpPoly gl{1}, hr{1};
  for (auto& x : left) gl = fp_mul(gl, x, p);
  for (auto& x : right) hr = fp_mul(hr, x, p);
  Integer lc = f.back() % p;
  if (lc < 0) lc += p;
  for (auto& c : gl) c = mulmod(c, lc.get_si(), p);
  ZPoly g = from_fp(gl), h = from_fp(hr);
  hensel_lift(f, g, h, p, target);
  multi_lift(g, left, p, target, out);
  multi_lift(h, right, p, target, out);
}

ZPoly to_primitive_z(const QPoly& a) {
  Integer den = 1;
  for (const auto& c : a.coeffs()) den = lcm(den, c.get_den());
  ZPoly z;
  for (const auto& c : a.coeffs()) z.push_back(c.get_num() * (den / c.get_den()));
  Integer g = 0;
  for (const auto& c : z) g = gcd(g, c);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

QPoly to_q(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c));
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  ZPoly out = a;
  Integer half = m / 2;
  for (auto& c : out) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(out);
  return out;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Exact quotient a / b over Z, or empty optional when b does not divide a.
bool z_divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (size_t i = a.size(); i-- >= b.size();) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = r[i] / b.back();
    q[i - b.size() + 1] = c;
    for (size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] -= c * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  ztrim(q);
  quotient = q;
  return true;
}

/// Factors a primitive square-free integer polynomial of positive degree.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& a) {
  int n = static_cast<int>(a.size()) - 1;
  if (n == 1) return {a};
  // Pick the prime with the fewest modular factors among a handful of good ones.
  int64_t best_p = 0;
  size_t best_count = SIZE_MAX;
  std::vector<std::pair<FpPoly, int>> best_ddf;
  int tried = 0;
  for (int64_t p = 3; tried < 8 && p < 10000; p += 2) {
    if (!is_prime(p)) continue;
    if (a.back() % p == 0) continue;
    FpPoly ap = fp_monic(to_fp(a, p), p);
    if (fp_gcd(ap, fp_derivative(ap, p), p).size() != 1) continue;
    ++tried;
    auto ddf = distinct_degree(ap, p);
    size_t count = 0;
    for (auto& [g, d] : ddf) count += (g.size() - 1) / d;
    if (count < best_count) {
      best_count = count;
      best_p = p;
      best_ddf = ddf;
    }
    if (count == 1) break;
  }
  if (best_count == 1) return {a};
  int64_t p = best_p;
  std::mt19937_64 rng(0x5eed + static_cast<uint64_t>(p));
  std::vector<FpPoly> modular;
  for (auto& [g, d] : best_ddf) equal_degree(g, d, p, rng, modular);

  Integer maxc = 0;
  for (const auto& c : a) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = maxc * (n + 1);
  bound <<= n;
  bound *= abs(a.back()) * 2;
  Integer P(p);
  while (P <= bound) P *= p;

  std::vector<ZPoly> lifted;
  multi_lift(a, modular, p, P, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = a;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{rest.back()};
      for (size_t i : idx) cand = zm_mul(cand, lifted[i], P);
      cand = primitive_part(symmetric(cand, P));
      ZPoly quot;
      if (z_divides(rest, cand, quot)) {
        result.push_back(cand);
        rest = quot;
        for (size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        found = true;
        break;
      }
      // Next combination.
      size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(primitive_part(rest));
  return result;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

QFactorization squarefree_decomposition(const QPoly& p) {
  if (p.is_zero_poly()) throw DomainError("squarefree_decomposition of the zero polynomial");
  QFactorization out;
  if (p.degree() == 0) return out;
  QPoly f = p.monic();
  QPoly a0 = poly_gcd(f, f.derivative());
  QPoly b = f / a0;
  QPoly c = f.derivative() / a0;
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly a = poly_gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

QFactorization factor_rational_poly(const QPoly& p) {
  if (p.is_zero_poly()) throw DomainError("factor_rational_poly: zero polynomial");
  QFactorization out;
  for (const auto& [a, mult] : squarefree_decomposition(p)) {
    for (const auto& z : factor_squarefree_z(to_primitive_z(a))) out.emplace_back(to_q(z).monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return qpoly_less(x.first, y.first);
    return x.second < y.second;
  });
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_rational_poly(p);
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace lcomp
