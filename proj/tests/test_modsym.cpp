#include "doctest.h"
#include "lcomp/modsym.hpp"

using namespace lcomp;

namespace {

int kronecker_minus(int64_t D, int64_t p) {
  // (D/p) for the odd prime p, or the 2-adic value for p = 2 (D = -1 or -3).
  if (p == 2) return D == -3 ? -1 : 0;
  int64_t r = mod(D, p);
  if (r == 0) return 0;
  return power_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Genus of X_0(N) from the classical formula.
int64_t genus_x0(int64_t N) {
  int64_t mu = N, nu2 = 1, nu3 = 1, n = N;
  std::vector<int64_t> primes;
  for (int64_t p = 2; p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  for (int64_t p : primes) mu = mu / p * (p + 1);
  for (int64_t p : primes) nu2 *= 1 + kronecker_minus(-1, p);
  for (int64_t p : primes) nu3 *= 1 + kronecker_minus(-3, p);
  if (N % 4 == 0) nu2 = 0;
  if (N % 9 == 0) nu3 = 0;
  int64_t cusps = 0;
  for (int64_t d = 1; d <= N; ++d)
    if (N % d == 0) cusps += euler_phi(gcd64(d, N / d));
  // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 c
  return (12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps) / 12;
}

// Genus of X_1(N), N >= 5.
int64_t genus_x1(int64_t N) {
  Rational mu = Rational(N * N);
  int64_t n = N;
  for (int64_t p = 2; p <= n; ++p)
    if (n % p == 0) {
      mu *= Rational(p * p - 1, p * p);
      while (n % p == 0) n /= p;
    }
  mu.canonicalize();
  int64_t s = 0;
  for (int64_t d = 1; d <= N; ++d)
    if (N % d == 0) s += euler_phi(d) * euler_phi(N / d);
  Rational g = 1 + mu / 24 - Rational(s, 4);
  g.canonicalize();
  return g.get_num().get_si();
}

QMatrix on_cusp(const ModularSymbolSpace& M, const QMatrix& T) { return restrict_to(T, M.cuspidal_subspace()); }

QVec unit(size_t n, size_t j) {
  QVec v(n, Rational(0));
  v[j] = 1;
  return v;
}

}  // namespace

TEST_CASE("GammaH") {
  GammaH H(50, {11});
  CHECK(H.elements() == std::vector<int64_t>{1, 11, 21, 31, 41});
  CHECK(H.index() == 360);
  CHECK_FALSE(H.contains_minus_one());
  CHECK(GammaH::gamma0(11).index() == 12);
  CHECK(GammaH::gamma1(5).index() == 24);
  CHECK(H.image_mod(10).elements() == std::vector<int64_t>{1});
  CHECK(GammaH(81, {10}).elements().size() == 9);
}

TEST_CASE("Heilbronn matrices") {
  for (int64_t n : {1, 2, 5, 12}) {
    auto hs = heilbronn_matrices(n);
    CHECK(!hs.empty());
    for (auto& h : hs) {
      CHECK(h[0] * h[3] - h[1] * h[2] == n);
      CHECK(h[0] > h[1]);
      CHECK(h[1] >= 0);
      CHECK(h[3] > h[2]);
      CHECK(h[2] >= 0);
    }
  }
  CHECK(heilbronn_matrices(1).size() == 1);
}

TEST_CASE("cuspidal dimension matches twice the genus") {
  for (int64_t N = 1; N <= 60; ++N) {
    ModularSymbolSpace M(GammaH::gamma0(N), 2);
    CHECK_MESSAGE(static_cast<int64_t>(M.cuspidal_dim()) == 2 * genus_x0(N), "N = " << N);
  }
  for (int64_t N : {5, 11, 13, 16, 20}) {
    ModularSymbolSpace M(GammaH::gamma1(N), 2);
    CHECK_MESSAGE(static_cast<int64_t>(M.cuspidal_dim()) == 2 * genus_x1(N), "N = " << N);
  }
}

TEST_CASE("level one, weight 12") {
  ModularSymbolSpace M(GammaH::gamma0(1), 12);
  CHECK(M.dim() == 3);
  CHECK(M.cuspidal_dim() == 2);
  // tau(2) = -24, and 1 + 2^11 on the Eisenstein line.
  CHECK(charpoly(on_cusp(M, M.hecke(2))) == poly_pow(qpoly({24, 1}), 2));
  CHECK(charpoly(M.hecke(2)) == poly_pow(qpoly({24, 1}), 2) * qpoly({-2049, 1}));
  CHECK(charpoly(on_cusp(M, M.hecke(3))) == poly_pow(qpoly({-252, 1}), 2));
}

TEST_CASE("Hecke algebra identities") {
  ModularSymbolSpace M(GammaH::gamma0(11), 2);
  CHECK(charpoly(on_cusp(M, M.hecke(2))) == poly_pow(qpoly({2, 1}), 2));
  CHECK(M.hecke(2) * M.hecke(3) == M.hecke(6));
  CHECK(M.hecke(2) * M.hecke(3) == M.hecke(3) * M.hecke(2));

  // T_p^2 - T_{p^2} = p^(k-1) <p> on Gamma_1(13), weight 2 and 3.
  for (int k : {2, 3}) {
    ModularSymbolSpace G(GammaH::gamma1(13), k);
    for (int64_t p : {2, 3}) {
      Rational pk = 1;
      for (int t = 0; t < k - 1; ++t) pk *= p;
      CHECK(G.hecke(p) * G.hecke(p) - G.hecke(p * p) == pk * G.diamond(p));
    }
    CHECK(G.hecke(2) * G.diamond(2) == G.diamond(2) * G.hecke(2));
  }
}

TEST_CASE("diamond, star and the normalizer action") {
  GammaH H(50, {11});
  ModularSymbolSpace M(H, 2);
  QMatrix I = QMatrix::identity(M.dim());
  for (int64_t h : H.elements()) CHECK(M.diamond(h) == I);
  CHECK(M.diamond(3) != I);
  QMatrix S = M.star();
  CHECK(S * S == I);
  CHECK(S * M.hecke(3) == M.hecke(3) * S);
  CHECK(M.normalizer_action(Mat2::of(1, 0, 0, -1)) == S);
  CHECK(M.normalizer_action(Mat2::of(1, 0, 0, 1)) == I);
  CHECK(M.normalizer_action(Mat2::of(1, 1, 0, 1)) == I);
  CHECK(M.normalizer_action(Mat2::of(1, 0, 50, 1)) == I);
  // Diamond operators are the action of Gamma_0(N) elements.
  CHECK(M.normalizer_action(Mat2::of(17, 1, 50, 3)) == M.diamond(3));
  // [[1, 1/5], [0, 1]] normalizes Gamma_H(50) for this H, [[1, 1/2], [0, 1]] does not.
  CHECK_NOTHROW(M.normalizer_action(Mat2{Rational(1), make_rational(1, 5), Rational(0), Rational(1)}));
  CHECK_THROWS_AS(M.normalizer_action(Mat2{Rational(1), make_rational(1, 2), Rational(0), Rational(1)}), DomainError);

  // Every basis symbol is the path symbol it names.
  for (size_t j = 0; j < M.dim(); ++j) {
    auto [P, g] = M.basis_symbol(j);
    CHECK(g.det() == 1);
    CHECK(M.path_symbol(P, g.act(Cusp{Integer(0), Integer(1)}), g.act(Cusp::infinity())) == unit(M.dim(), j));
  }

  ModularSymbolSpace M5(GammaH::gamma1(5), 5);
  for (size_t j = 0; j < M5.dim(); ++j) {
    auto [P, g] = M5.basis_symbol(j);
    // [P, g] = (gP){g0, g oo} with (gP)(X, Y) = P(dX - bY, -cX + aY).
    HomPoly gP = substitute(P, g.d, -g.b, -g.c, g.a);
    CHECK(M5.path_symbol(gP, g.act(Cusp{Integer(0), Integer(1)}), g.act(Cusp::infinity())) == unit(M5.dim(), j));
  }
  CHECK(M5.star() * M5.star() == QMatrix::identity(M5.dim()));
}

TEST_CASE("Atkin-Lehner involution") {
  ModularSymbolSpace M(GammaH::gamma0(11), 2);
  QMatrix W = M.atkin_lehner(11);
  CHECK(W * W == QMatrix::identity(M.dim()));
  CHECK(W * M.hecke(2) == M.hecke(2) * W);
  // The newform of level 11 has a_11 = 1, so W acts by -1 on cusp forms.
  CHECK(on_cusp(M, W) == Rational(-1) * QMatrix::identity(2));

  ModularSymbolSpace M8(GammaH::gamma0(8), 4);
  QMatrix W8 = M8.atkin_lehner(8);
  CHECK(W8 * W8 == QMatrix::identity(M8.dim()));
  CHECK_THROWS_AS(M8.atkin_lehner(2), UsageError);
}

TEST_CASE("p-new subspace via degeneracy maps") {
  auto pnew = [](const ModularSymbolSpace& hi, const ModularSymbolSpace& lo, int64_t p) {
    auto [a, b] = degeneracy_matrices(hi, lo, p);
    std::vector<QVec> rows = a.row_list();
    for (auto& r : b.row_list()) rows.push_back(r);
    return intersect(kernel(QMatrix::from_rows(rows, hi.dim())), hi.cuspidal_subspace());
  };
  ModularSymbolSpace M22(GammaH::gamma0(22), 2), M11(GammaH::gamma0(11), 2);
  CHECK(pnew(M22, M11, 2).dim() == 0);
  // Level 37 is new (genus 2) against level 1.
  ModularSymbolSpace M37(GammaH::gamma0(37), 2), M1(GammaH::gamma0(1), 2);
  CHECK(pnew(M37, M1, 37).dim() == 4);
  // Level 33: genus 3, old part from 11 has dimension 4.
  ModularSymbolSpace M33(GammaH::gamma0(33), 2);
  CHECK(pnew(M33, M11, 3).dim() == 2);
}

TEST_CASE("weight scaling") {
  ModularSymbolSpace M(GammaH::gamma1(5), 3);
  CHECK_THROWS_AS(M.normalizer_action(Mat2::of(5, 0, 0, 1), false), DomainError);
  CHECK_NOTHROW(M.normalizer_action(Mat2::of(25, 0, 0, 1), false));
}
