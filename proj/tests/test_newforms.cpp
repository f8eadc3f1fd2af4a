#include "doctest.h"
#include "lcomp/newforms.hpp"

using namespace lcomp;

namespace {

// a_p = p + 1 - #E(F_p) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
int64_t ap_by_counting(const std::array<int64_t, 5>& a, int64_t p) {
  int64_t count = 1;
  for (int64_t x = 0; x < p; ++x)
    for (int64_t y = 0; y < p; ++y) {
      int64_t lhs = y * y + a[0] * x * y + a[2] * y;
      int64_t rhs = x * x * x + a[1] * x * x + a[3] * x + a[4];
      if (mod(lhs - rhs, p) == 0) ++count;
    }
  return p + 1 - count;
}

Newform find_rational(std::vector<Newform> fs, int64_t ell, long value) {
  for (auto& f : fs)
    if (!f.hecke_field && eigenvalue(f, ell) == NfElem(value)) return f;
  FAIL("no rational orbit with the requested eigenvalue");
  return fs.front();
}

NfVec star_apply(const Newform& f, const NfVec& v) { return lcomp::apply(f.space->star(), v); }

}  // namespace

TEST_CASE("Sturm bound") {
  CHECK(sturm_bound(GammaH::gamma0(11), 2) == 2);
  CHECK(sturm_bound(GammaH(50, {11}), 2) == 60);
  CHECK(sturm_bound(GammaH::gamma0(1), 12) == 1);
  CHECK(sturm_bound(GammaH::gamma0(1), 13) == 2);
}

TEST_CASE("p-new subspaces") {
  ModularSymbolSpace M50(GammaH(50, {11}), 2);
  CHECK(new_subspace(M50, 5).dim() == 18);
  ModularSymbolSpace M22(GammaH::gamma0(22), 2);
  CHECK(intersect(new_subspace(M22, 2), M22.cuspidal_subspace()).dim() == 0);
  // Level 11 has nothing below it in weight 2.
  ModularSymbolSpace M11(GammaH::gamma0(11), 2);
  CHECK(new_subspace(M11, 11).dim() == M11.dim());
  CHECK_THROWS_AS(new_subspace(M11, 3), UsageError);
}

TEST_CASE("type group") {
  auto H = type_group(DirichletCharacter(50), 5);
  CHECK(H.elements() == std::vector<int64_t>{1, 11, 21, 31, 41});
  CHECK(type_group(DirichletCharacter(81), 3).elements().size() == 9);
  CHECK(type_group(DirichletCharacter(37), 37).elements().size() == 36);
}

TEST_CASE("level 11 and point counts") {
  auto fs = newforms(DirichletCharacter(11), 11, 2);
  REQUIRE(fs.size() == 1);
  Newform& f = fs[0];
  CHECK(!f.hecke_field);
  const std::array<int64_t, 5> E{0, -1, 1, -10, -20};
  for (int64_t p : {2, 3, 5, 7, 13, 17, 19, 23})
    CHECK_MESSAGE(eigenvalue(f, p) == NfElem(ap_by_counting(E, p)), "p = " << p);
  CHECK(eigenvalue(f, 11) == NfElem(1));
  CHECK(eigenvalue(f, 1) == NfElem(1));
}

TEST_CASE("level 24 and point counts") {
  auto fs = newforms(DirichletCharacter(24), 2, 2);
  REQUIRE(fs.size() == 1);
  const std::array<int64_t, 5> E{0, -1, 0, -4, 4};
  for (int64_t p : {5, 7, 11, 13, 17})
    CHECK_MESSAGE(eigenvalue(fs[0], p) == NfElem(ap_by_counting(E, p)), "p = " << p);
  CHECK(eigenvalue(fs[0], 3) == NfElem(-1));
  CHECK(eigenvalue(fs[0], 5) == NfElem(-2));
}

TEST_CASE("level 50: q - q^2 + q^3 + q^4 + ...") {
  auto fs = newforms(DirichletCharacter(50), 5, 2);
  Newform f = find_rational(fs, 2, -1);
  CHECK(eigenvalue(f, 3) == NfElem(1));
  CHECK(eigenvalue(f, 4) == NfElem(1));
  CHECK(eigenvalue(f, 5) == NfElem(0));
  CHECK(star_apply(f, f.eigensymbol) == f.eigensymbol);
}

TEST_CASE("level 25, weight 3: Hecke field x^4 + 9") {
  auto chi = DirichletCharacter::from_values(5, {{2, RootOfUnity::make(4, 1)}}).extend(25);
  auto fs = newforms(chi, 5, 3);
  REQUIRE(fs.size() == 1);
  Newform& f = fs[0];
  REQUIRE(f.hecke_field);
  CHECK(f.hecke_field->modulus() == qpoly({9, 0, 0, 0, 1}));
  NfElem lambda = NfElem::generator(f.hecke_field);
  NfElem i = f.character_value(2);
  CHECK(i * i == NfElem(-1));
  CHECK(eigenvalue(f, 2) == lambda);
  CHECK(eigenvalue(f, 3) == i * lambda);
  CHECK(eigenvalue(f, 4) == -i);
  CHECK(eigenvalue(f, 5) == NfElem(0));
}

TEST_CASE("level 81: a_2 = sqrt 3") {
  auto fs = newforms(DirichletCharacter(81), 3, 2);
  REQUIRE(fs.size() == 1);
  Newform& f = fs[0];
  REQUIRE(f.hecke_field);
  CHECK(f.hecke_field->modulus() == qpoly({-3, 0, 1}));
  NfElem s = NfElem::generator(f.hecke_field);
  CHECK(eigenvalue(f, 2) == s);
  CHECK(eigenvalue(f, 4) == NfElem(1));
  CHECK(eigenvalue(f, 5) == -s);
  CHECK(eigenvalue(f, 3) == NfElem(0));
}

TEST_CASE("orbit dimensions account for the whole new space") {
  for (int64_t N : {23, 29, 37, 43}) {
    auto fs = newforms(DirichletCharacter(N), N, 2);
    ModularSymbolSpace M(GammaH::gamma0(N), 2);
    size_t total = 0;
    for (auto& f : fs) total += 2 * f.orbit_plus.dim();
    CHECK_MESSAGE(total == new_cuspidal_subspace(M).dim(), "N = " << N);
  }
}

TEST_CASE("Hecke recursion and eigensymbol invariants") {
  auto chi = DirichletCharacter::from_values(5, {{2, RootOfUnity::make(4, 1)}});
  struct Case {
    DirichletCharacter eps;
    int64_t p;
    int k;
  };
  std::vector<Case> cases{{DirichletCharacter(50), 5, 2}, {chi.extend(25), 5, 3}, {chi.pow(2).extend(25), 5, 4},
                          {DirichletCharacter(27), 3, 2}, {DirichletCharacter(8), 2, 4}};
  for (auto& c : cases) {
    auto fs = newforms(c.eps, c.p, c.k);
    REQUIRE(!fs.empty());
    for (auto& f : fs) {
      for (int64_t ell : {2, 3, 7}) {
        if (f.level % ell == 0) continue;
        NfElem lk(1);
        for (int t = 0; t < c.k - 1; ++t) lk = lk * NfElem(ell);
        CHECK(eigenvalue(f, ell * ell) == eigenvalue(f, ell) * eigenvalue(f, ell) - f.character_value(ell) * lk);
      }
      // p-new with r >= 2 and small conductor at p: a_p = 0.
      if (f.r >= 2) CHECK(eigenvalue(f, f.p) == NfElem(0));
      // Normalized plus eigensymbol.
      size_t j0 = 0;
      while (is_zero(f.eigensymbol[j0])) ++j0;
      CHECK(f.eigensymbol[j0] == NfElem(1));
      CHECK(star_apply(f, f.eigensymbol) == f.eigensymbol);
      // The joint eigenspace of Sigma and T_ell (ell not dividing the level) is a line.
      const size_t n = f.space->dim();
      std::vector<NfVec> rows;
      auto add_rows = [&](const QMatrix& T, const NfElem& a) {
        NfMatrix A = to_nf(T);
        for (size_t i = 0; i < n; ++i) A(i, i) = A(i, i) - a;
        for (auto& r : A.row_list()) rows.push_back(r);
      };
      add_rows(f.space->star(), NfElem(1));
      for (int64_t ell = 2; ell <= 13; ++ell)
        if (is_prime(ell) && f.level % ell != 0) add_rows(f.space->hecke(ell), eigenvalue(f, ell));
      CHECK(kernel(NfMatrix::from_rows(rows, n)).dim() == 1);
    }
  }
}
