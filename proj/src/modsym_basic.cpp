#include <algorithm>
#include <set>
#include <sstream>

#include "lcomp/modsym.hpp"

namespace lcomp {

GammaH::GammaH(int64_t N, const std::vector<int64_t>& gens) : N_(N) {
  if (N < 1) throw UsageError("GammaH: level must be positive");
  std::set<int64_t> h{mod(1, N)};
  for (int64_t g : gens) {
    int64_t r = mod(g, N);
    if (gcd64(r, N) != 1) throw UsageError("GammaH: generator is not a unit");
    // Adjoin r and close up: multiply everything by powers of r.
    if (h.count(r)) continue;
    gens_.push_back(r);
    std::vector<int64_t> frontier(h.begin(), h.end());
    while (!frontier.empty()) {
      std::vector<int64_t> next;
      for (int64_t x : frontier)
        for (int64_t y : gens_) {
          int64_t z = x * y % N;
          if (h.insert(z).second) next.push_back(z);
        }
      frontier = std::move(next);
    }
  }
  H_.assign(h.begin(), h.end());
}

GammaH GammaH::gamma0(int64_t N) {
  std::vector<int64_t> all;
  for (int64_t u = 1; u < N; ++u)
    if (gcd64(u, N) == 1) all.push_back(u);
  return GammaH(N, all);
}

GammaH GammaH::gamma1(int64_t N) { return GammaH(N, {}); }

bool GammaH::contains(int64_t d) const { return std::binary_search(H_.begin(), H_.end(), mod(d, N_)); }

int64_t GammaH::index() const {
  int64_t idx = N_;
  int64_t n = N_;
  for (int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      idx = idx / p * (p + 1);
      while (n % p == 0) n /= p;
    }
  if (n > 1) idx = idx / n * (n + 1);
  return idx * euler_phi(N_) / static_cast<int64_t>(H_.size());
}

std::vector<int64_t> GammaH::generators() const { return gens_; }

GammaH GammaH::image_mod(int64_t M) const {
  if (N_ % M) throw UsageError("GammaH::image_mod: not a divisor");
  std::vector<int64_t> g;
  for (int64_t x : gens_) g.push_back(mod(x, M));
  return GammaH(M, g);
}

Cusp Cusp::from(const Integer& a, const Integer& c) {
  if (is_zero(a) && is_zero(c)) throw DomainError("Cusp: 0/0");
  Integer g = gcd(a, c);
  Integer n = a / g, d = c / g;
  if (sgn(d) < 0 || (is_zero(d) && sgn(n) < 0)) {
    n = -n;
    d = -d;
  }
  return Cusp{n, d};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
  Rational D = det();
  if (is_zero(D)) throw DomainError("Mat2::inverse: singular");
  return Mat2{d / D, -b / D, -c / D, a / D};
}

Cusp Mat2::act(const Cusp& z) const {
  // (a z + b) / (c z + d) with z = num/den, cleared of denominators.
  Rational top = a * Rational(z.num) + b * Rational(z.den);
  Rational bot = c * Rational(z.num) + d * Rational(z.den);
  Integer L = lcm(top.get_den(), bot.get_den());
  Rational t = top * Rational(L), u = bot * Rational(L);
  return Cusp::from(t.get_num(), u.get_num());
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << "[[" << a.get_str() << "," << b.get_str() << "],[" << c.get_str() << "," << d.get_str() << "]]";
  return os.str();
}

HomPoly substitute(const HomPoly& P, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  size_t w = P.empty() ? 0 : P.size() - 1;
  // Powers of (aX + bY) and (cX + dY) as coefficient vectors in X-degree.
  auto powers = [w](const Rational& s, const Rational& t) {
    std::vector<HomPoly> pw(w + 1);
    pw[0] = {Rational(1)};
    for (size_t e = 1; e <= w; ++e) {
      pw[e].assign(e + 1, Rational(0));
      for (size_t j = 0; j < e; ++j) {
        pw[e][j + 1] += s * pw[e - 1][j];
        pw[e][j] += t * pw[e - 1][j];
      }
    }
    return pw;
  };
  auto A = powers(a, b), C = powers(c, d);
  HomPoly out(w + 1, Rational(0));
  for (size_t i = 0; i <= w; ++i) {
    if (is_zero(P[i])) continue;
    const HomPoly& u = A[i];
    const HomPoly& v = C[w - i];
    for (size_t x = 0; x < u.size(); ++x) {
      if (is_zero(u[x])) continue;
      for (size_t y = 0; y < v.size(); ++y)
        if (!is_zero(v[y])) out[x + y] += P[i] * u[x] * v[y];
    }
  }
  return out;
}

std::vector<std::array<int64_t, 4>> heilbronn_matrices(int64_t n) {
  if (n < 1) throw UsageError("heilbronn_matrices: n must be positive");
  std::vector<std::array<int64_t, 4>> out;
  for (int64_t a = 1; a <= n; ++a)
    for (int64_t d = 1; a + d <= n + 1; ++d) {
      int64_t e = a * d - n;  // = b c
      if (e < 0) continue;
      if (e == 0) {
        for (int64_t c = 0; c < d; ++c) out.push_back({a, 0, c, d});
        for (int64_t b = 1; b < a; ++b) out.push_back({a, b, 0, d});
        continue;
      }
      for (int64_t b = 1; b < a; ++b)
        if (e % b == 0 && e / b < d) out.push_back({a, b, e / b, d});
    }
  return out;
}

}  // namespace lcomp
