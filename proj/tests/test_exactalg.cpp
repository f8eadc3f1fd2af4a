#include <random>

#include "doctest.h"
#include "lcomp/factor.hpp"
#include "lcomp/matrix.hpp"
#include "lcomp/numberfield.hpp"

using namespace lcomp;

namespace {

using QMat = Matrix<Rational>;

QPoly product(const QFactorization& fs) {
  QPoly acc(Rational(1));
  for (auto& [f, e] : fs) acc = acc * poly_pow(f, e);
  return acc;
}

// Independent oracle: all monic integer divisors of degree <= 2 with
// coefficients bounded by `h`, found by trial division.
std::vector<QPoly> brute_force_small_divisors(const QPoly& p, int h) {
  std::vector<QPoly> out;
  for (int a = -h; a <= h; ++a) {
    QPoly lin = qpoly({a, 1});
    if ((p % lin).is_zero_poly()) out.push_back(lin);
  }
  for (int a = -h; a <= h; ++a)
    for (int b = -h; b <= h; ++b) {
      QPoly quad = qpoly({a, b, 1});
      bool has_root = false;
      for (int r = -h; r <= h; ++r)
        if (quad(Rational(r)) == 0) has_root = true;
      if (has_root) continue;
      if ((p % quad).is_zero_poly()) out.push_back(quad);
    }
  return out;
}

QMat random_matrix(std::mt19937& rng, size_t r, size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  QMat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = d(rng) * (d(rng) % 2 == 0 ? 1 : 0);
  return m;
}

}  // namespace

TEST_CASE("factorization of small polynomials") {
  auto f1 = factor_rational_poly(qpoly({-1, 0, 1}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == qpoly({-1, 1}));
  CHECK(f1[1].first == qpoly({1, 1}));

  auto f2 = factor_rational_poly(qpoly({9, 0, 0, 0, 1}));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first == qpoly({9, 0, 0, 0, 1}));
  CHECK(f2[0].second == 1);

  QPoly x4m1 = qpoly({-1, 0, 0, 0, 1});
  auto f3 = factor_rational_poly(x4m1);
  auto oracle = brute_force_small_divisors(x4m1, 3);
  std::vector<QPoly> irreducible_oracle;
  for (auto& d : oracle) irreducible_oracle.push_back(d);
  REQUIRE(f3.size() == 3);
  for (auto& [f, e] : f3) {
    CHECK(e == 1);
    CHECK(std::find(irreducible_oracle.begin(), irreducible_oracle.end(), f) != irreducible_oracle.end());
  }
  CHECK(product(f3) == x4m1);
}

TEST_CASE("factorization reproduces the input with multiplicities") {
  std::vector<QPoly> inputs = {
      poly_pow(qpoly({1, 1}), 3) * qpoly({-3, 0, 1}) * qpoly({1, 1, 1}),
      cyclotomic(24) * cyclotomic(8) * cyclotomic(3),
      qpoly({-2, 0, 0, 0, 0, 0, 1}) * poly_pow(qpoly({5, 0, 1}), 2),
      qpoly({6, -11, 6, -1}) * Rational(7, 3),
      qpoly({1, 0, -10, 0, 1}),  // minimal polynomial of sqrt2 + sqrt3: splits mod every prime
  };
  for (auto& p : inputs) {
    auto fs = factor_rational_poly(p);
    CHECK(product(fs) == p.monic());
    for (auto& [f, e] : fs) {
      CHECK(f.leading() == 1);
      CHECK(f.degree() >= 1);
    }
  }
  CHECK(factor_rational_poly(qpoly({1, 0, -10, 0, 1})).size() == 1);
  CHECK(factor_rational_poly(cyclotomic(24)).size() == 1);
  CHECK_THROWS_AS(factor_rational_poly(QPoly()), DomainError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == qpoly({-1, 1}));
  CHECK(cyclotomic(4) == qpoly({1, 0, 1}));
  CHECK(cyclotomic(12) == qpoly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic(24).degree() == 8);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(QMat::identity(3)).dim() == 0);
  auto z = kernel(QMat(2, 2));
  CHECK(z.dim() == 2);
  CHECK(z.basis == QMat::identity(2));
  auto k = kernel(QMat::from_ints({{1, 1}, {1, 1}}));
  REQUIRE(k.dim() == 1);
  // Reduced echelon form pivots on the first coordinate: (1, -1).
  CHECK(k.basis == QMat::from_ints({{1, -1}}));
}

TEST_CASE("kernel and rank properties on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    QMat m = random_matrix(rng, r, c, 3);
    auto k = kernel(m);
    CHECK(k.dim() + rank(m) == c);
    for (auto& v : k.vectors())
      for (auto& x : m * v) CHECK(x == 0);
    // Re-echelonizing a returned basis is a no-op.
    CHECK(rref(k.basis) == k.basis);
  }
}

TEST_CASE("subspace intersection") {
  auto e = [](int i) {
    Vec<Rational> v(3, Rational(0));
    v[i] = 1;
    return v;
  };
  auto v = span<Rational>({e(0), e(1)}, 3);
  CHECK(intersect(v, v).basis == v.basis);
  CHECK(intersect(span<Rational>({e(0)}, 3), span<Rational>({e(1)}, 3)).dim() == 0);
  auto i = intersect(span<Rational>({e(0), e(1)}, 3), span<Rational>({e(1), e(2)}, 3));
  REQUIRE(i.dim() == 1);
  CHECK(i.basis.row(0) == e(1));
  CHECK_THROWS_AS(intersect(span<Rational>({e(0)}, 3), span<Rational>({{Rational(1)}}, 1)), UsageError);
}

TEST_CASE("minimal polynomial") {
  CHECK(minpoly(QMat::identity(3)) == qpoly({-1, 1}));
  CHECK(minpoly(QMat::from_ints({{0, 1}, {0, 0}})) == qpoly({0, 0, 1}));
  // Companion matrix of x^2 - x + 2.
  CHECK(minpoly(QMat::from_ints({{0, -2}, {1, 1}})) == qpoly({2, -1, 1}));
  QMat d = QMat::from_ints({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(minpoly(d) == qpoly({-2, 1}) * qpoly({-3, 1}));
  CHECK(charpoly(d) == poly_pow(qpoly({-2, 1}), 2) * qpoly({-3, 1}));
}

TEST_CASE("charpoly agrees with minpoly-based oracle on random matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 1 + rng() % 5;
    QMat m = random_matrix(rng, n, n, 4);
    QPoly c = charpoly(m);
    CHECK(c.degree() == static_cast<int>(n));
    // Cayley-Hamilton, and the minimal polynomial divides the characteristic one.
    CHECK(evaluate(c, m).is_zero_matrix());
    CHECK((c % minpoly(m)).is_zero_poly());
  }
}

TEST_CASE("intertwiner solving") {
  QMat I = QMat::identity(2);
  CHECK(solve_intertwiners<Rational>({{I, I}}).size() == 4);

  QMat A1 = QMat::from_ints({{1, 0, 0, -1}, {0, 0, -1, 0}, {-1, 1, -2, 1}, {1, 0, -1, 0}});
  QMat A2 = QMat::from_ints({{-1, 1, -2, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, -1, -1, 1}});
  QMat A1p = QMat::from_ints({{-2, 1, -1, 1}, {-2, 2, -2, 1}, {-1, 2, -1, 0}, {-2, 2, -1, 0}});
  QMat A2p = QMat::from_ints({{-1, 2, -1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, -1}});
  QMat B = QMat::from_ints({{1, -2, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 1}, {0, -1, -1, 1}});

  auto comm = solve_intertwiners<Rational>({{A1, A1}, {A2, A2}});
  REQUIRE(comm.size() == 1);
  CHECK(comm[0] == QMat::identity(4));

  // B intertwines in the direction x A_i' = A_i x; the other direction has
  // a 1-dimensional solution space too, spanned by B^-1 up to scaling.
  auto sol = solve_intertwiners<Rational>({{A1p, A1}, {A2p, A2}});
  REQUIRE(sol.size() == 1);
  CHECK(sol[0] == B);
  CHECK(B * A1p == A1 * B);
  CHECK(B * A2p == A2 * B);
  auto other = solve_intertwiners<Rational>({{A1, A1p}, {A2, A2p}});
  REQUIRE(other.size() == 1);
  CHECK((other[0] * B).is_zero_matrix() == false);
  CHECK(rank(other[0] * B) == 4);

  CHECK_THROWS_AS(solve_intertwiners<Rational>({{I, QMat::identity(3)}}), UsageError);
}

TEST_CASE("intertwiners with equal sides contain the identity") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    QMat a = random_matrix(rng, 3, 3, 2), b = random_matrix(rng, 3, 3, 2);
    auto sol = solve_intertwiners<Rational>({{a, a}, {b, b}});
    std::vector<Vec<Rational>> flat;
    for (auto& s : sol) flat.push_back([&] {
        Vec<Rational> v;
        for (size_t i = 0; i < 3; ++i)
          for (size_t j = 0; j < 3; ++j) v.push_back(s(i, j));
        return v;
      }());
    auto sp = span(flat, 9);
    Vec<Rational> id(9, Rational(0));
    id[0] = id[4] = id[8] = 1;
    CHECK(contains(sp, id));
  }
}

TEST_CASE("number field arithmetic in Q[x]/(x^4 + 9)") {
  FieldPtr f = NumberField::make(qpoly({9, 0, 0, 0, 1}), "l");
  NfElem l = NfElem::generator(f);
  NfElem i = l * l / NfElem(3);
  CHECK(i * i == NfElem(-1));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  auto rnd = [&] {
    std::vector<Rational> c;
    for (int k = 0; k < 4; ++k) c.push_back(make_rational(d(rng), 1 + static_cast<long>(rng() % 3)));
    return NfElem(f, c);
  };
  for (int trial = 0; trial < 25; ++trial) {
    NfElem a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == NfElem(1));
  }
  CHECK(l.minpoly() == qpoly({9, 0, 0, 0, 1}));
  CHECK(i.minpoly() == qpoly({1, 0, 1}));
  CHECK_THROWS_AS(NumberField::make(qpoly({-1, 0, 1})), DomainError);
}

TEST_CASE("roots and field extensions") {
  FieldPtr f = NumberField::make(qpoly({9, 0, 0, 0, 1}), "l");
  auto r = roots_in_field(qpoly({1, 0, 1}), f);
  REQUIRE(r.size() == 2);
  for (auto& x : r) CHECK(x * x == NfElem(-1));
  CHECK(roots_in_field(qpoly({-2, 0, 1}), f).empty());
  CHECK(roots_in_field(qpoly({-1, 0, 0, 0, 1}), f).size() == 4);

  // Q(sqrt3)(i) has degree 4 over Q.
  FieldPtr s3 = NumberField::make(qpoly({-3, 0, 1}), "s");
  Extension e = adjoin_rational_root(s3, qpoly({1, 0, 1}));
  CHECK(e.field->degree() == 4);
  CHECK(e.base_generator * e.base_generator == NfElem(3));
  CHECK(e.new_root * e.new_root == NfElem(-1));

  // x^2 - 3 over Q(sqrt3) splits.
  auto fac = factor_over_field(to_nf(qpoly({-3, 0, 1})), s3);
  CHECK(fac.size() == 2);
  // x^4 + 9 over Q(i) splits into two quadratics.
  FieldPtr qi = NumberField::make(qpoly({1, 0, 1}), "i");
  auto fac2 = factor_over_field(to_nf(qpoly({9, 0, 0, 0, 1})), qi);
  CHECK(fac2.size() == 2);
  for (auto& [h, m] : fac2) CHECK(h.degree() == 2);
}
