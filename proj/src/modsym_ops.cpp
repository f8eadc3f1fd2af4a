#include <gmp.h>

#include "lcomp/modsym.hpp"

namespace lcomp {

namespace {

int64_t to_mod(const Integer& x, int64_t N) {
  Integer r = x % Integer(N);
  if (sgn(r) < 0) r += N;
  return r.get_si();
}

bool is_square(const Integer& n, Integer& root) {
  if (sgn(n) < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

}  // namespace

QVec ModularSymbolSpace::path_symbol(const HomPoly& P, const Cusp& alpha, const Cusp& beta) const {
  const int64_t N = level();
  // P{0, z} via the convergents of z.
  auto from_zero = [&](const Cusp& z) {
    QVec out = manin_symbol(P, 0, 1);  // P{0, oo}
    if (is_zero(z.den)) return out;
    Integer pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;
    Integer x = z.num, y = z.den;
    long j = 0;
    while (!is_zero(y)) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Integer r = x - q * y;
      x = y;
      y = r;
      Integer pj = q * pm1 + pm2, qj = q * qm1 + qm2;
      // g = [[(-1)^(j-1) p_j, p_{j-1}], [(-1)^(j-1) q_j, q_{j-1}]] in SL2(Z)
      // sends 0 to p_{j-1}/q_{j-1} and oo to p_j/q_j.
      int s = (j % 2 == 0) ? -1 : 1;
      Integer a = s * pj, b = pm1, c = s * qj, d = qm1;
      HomPoly Q = substitute(P, Rational(a), Rational(b), Rational(c), Rational(d));
      QVec term = manin_symbol(Q, to_mod(c, N), to_mod(d, N));
      for (size_t t = 0; t < out.size(); ++t) out[t] += term[t];
      pm2 = pm1;
      qm2 = qm1;
      pm1 = pj;
      qm1 = qj;
      ++j;
    }
    return out;
  };
  QVec b = from_zero(beta), a = from_zero(alpha);
  for (size_t t = 0; t < b.size(); ++t) b[t] -= a[t];
  return b;
}

Rational ModularSymbolSpace::weight_scaling(const Rational& det) const {
  Rational D = abs(det);
  if (is_zero(D)) throw DomainError("normalizer action: singular matrix");
  if (w_ % 2 == 0) {
    Rational s = 1;
    for (int t = 0; t < w_ / 2; ++t) s /= D;
    return s;
  }
  Integer rn, rd;
  if (!is_square(D.get_num(), rn) || !is_square(D.get_den(), rd))
    throw DomainError("normalizer action: det^(-(k-2)/2) is irrational for " + D.get_str());
  Rational root(rn, rd);
  root.canonicalize();
  Rational s = 1;
  for (int t = 0; t < w_; ++t) s /= root;
  return s;
}

// Image of the symbol h(P{0, oo}) under g, expressed in `target`.
QVec ModularSymbolSpace::image_of_symbol(const HomPoly& P, const Mat2& h, const Mat2& g,
                                         const ModularSymbolSpace& target, const Rational& scale) const {
  Mat2 m = g * h;
  // Left action through the adjugate: (mP)(X, Y) = P(dX - bY, -cX + aY).
  HomPoly Q = substitute(P, m.d, -m.b, -m.c, m.a);
  for (auto& x : Q) x *= scale;
  return target.path_symbol(Q, m.act(Cusp{Integer(0), Integer(1)}), m.act(Cusp::infinity()));
}

QMatrix ModularSymbolSpace::action_into(const ModularSymbolSpace& target, const Mat2& g, bool normalize,
                                        bool check) const {
  if (target.weight() != k_) throw UsageError("action_into: weights differ");
  Rational scale = normalize ? weight_scaling(g.det()) : Rational(1);
  QMatrix out(target.dim(), dim());
  std::vector<Mat2> probes;
  if (check) {
    const int64_t N = level();
    probes.push_back(Mat2::of(1, 1, 0, 1));
    probes.push_back(Mat2::of(1, 0, N, 1));
    for (int64_t h : group_.generators()) {
      int64_t a = inverse_mod(h, N);
      probes.push_back(Mat2::of(a, (a * h - 1) / N, N, h));
    }
  }
  for (size_t j = 0; j < dim(); ++j) {
    auto [P, h] = basis_symbol(j);
    QVec col = image_of_symbol(P, h, g, target, scale);
    for (const Mat2& delta : probes)
      if (image_of_symbol(P, delta * h, g, target, scale) != col)
        throw DomainError("normalizer action: " + g.to_string() + " does not normalize the group");
    out.set_col(j, col);
  }
  return out;
}

QMatrix ModularSymbolSpace::normalizer_action(const Mat2& g, bool check) const {
  std::string key = "N" + g.to_string() + (check ? "c" : "");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  QMatrix m = action_into(*this, g, true, check);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(key, m);
  return m;
}

QVec ModularSymbolSpace::act_on(const Mat2& g, const QVec& v) const {
  Rational scale = weight_scaling(g.det());
  QVec out(dim(), Rational(0));
  for (size_t j = 0; j < dim(); ++j) {
    if (is_zero(v[j])) continue;
    auto [P, h] = basis_symbol(j);
    QVec col = image_of_symbol(P, h, g, *this, scale);
    for (size_t t = 0; t < dim(); ++t) out[t] += v[j] * col[t];
  }
  return out;
}

QMatrix ModularSymbolSpace::hecke(int64_t n) const {
  std::string key = "T" + std::to_string(n);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const size_t m = static_cast<size_t>(w_ + 1);
  const int64_t N = level();
  auto heil = heilbronn_matrices(n);
  QMatrix T(dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    size_t g = basis_gens_[j];
    auto [c, d] = class_reps_[g / m];
    HomPoly mono(m, Rational(0));
    mono[g % m] = 1;
    QVec col(dim(), Rational(0));
    for (const auto& h : heil) {
      int cls = class_of(mod(c * h[0] + d * h[2], N), mod(c * h[1] + d * h[3], N));
      if (cls < 0) continue;
      HomPoly Q = substitute(mono, Rational(h[0]), Rational(h[1]), Rational(h[2]), Rational(h[3]));
      for (size_t i = 0; i < m; ++i)
        if (!is_zero(Q[i])) add_generator(col, static_cast<size_t>(cls) * m + i, Q[i]);
    }
    T.set_col(j, col);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(key, T);
  return T;
}

QMatrix ModularSymbolSpace::diamond(int64_t d) const {
  const int64_t N = level();
  if (gcd64(d, N) != 1) throw UsageError("diamond: d must be a unit mod N");
  const size_t m = static_cast<size_t>(w_ + 1);
  QMatrix D(dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    size_t g = basis_gens_[j];
    auto [c, e] = class_reps_[g / m];
    HomPoly mono(m, Rational(0));
    mono[g % m] = 1;
    D.set_col(j, manin_symbol(mono, d * c, d * e));
  }
  return D;
}

QMatrix ModularSymbolSpace::star() const {
  const size_t m = static_cast<size_t>(w_ + 1);
  QMatrix S(dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    size_t g = basis_gens_[j];
    size_t i = g % m;
    auto [c, d] = class_reps_[g / m];
    HomPoly mono(m, Rational(0));
    // [P(-X, Y), (-c, d)]
    mono[i] = (i % 2 == 0) ? 1 : -1;
    S.set_col(j, manin_symbol(mono, -c, d));
  }
  return S;
}

QMatrix ModularSymbolSpace::atkin_lehner(int64_t Q) const {
  const int64_t N = level();
  if (Q < 1 || N % Q != 0 || gcd64(Q, N / Q) != 1) throw UsageError("atkin_lehner: Q must exactly divide N");
  int64_t x, y;
  xgcd64(Q, N / Q, x, y);  // Q x + (N/Q) y = 1
  // [[Q, 1], [N z, Q w]] with Q w - (N/Q) z = 1.
  Mat2 W = Mat2::of(Q, 1, -N * y, Q * x);
  return normalizer_action(W);
}

std::pair<QMatrix, QMatrix> degeneracy_matrices(const ModularSymbolSpace& high, const ModularSymbolSpace& low,
                                                int64_t p) {
  if (high.level() != low.level() * p) throw UsageError("degeneracy_matrices: levels do not match");
  QMatrix a = high.action_into(low, Mat2::of(1, 0, 0, 1), false);
  QMatrix b = high.action_into(low, Mat2::of(p, 0, 0, 1), false);
  return {a, b};
}

}  // namespace lcomp
