#include "doctest.h"
#include "lcomp/localcomp.hpp"

using namespace lcomp;

namespace {

Newform level50() {
  for (auto& f : newforms(DirichletCharacter(50), 5, 2))
    if (!f.hecke_field && eigenvalue(f, 2) == NfElem(-1)) return f;
  FAIL("level 50 form missing");
  return {};
}

Newform only_form(const DirichletCharacter& eps, int64_t p, int k) {
  auto fs = newforms(eps, p, k);
  REQUIRE(fs.size() == 1);
  return fs[0];
}

NfElem tr(const NfMatrix& m) {
  NfElem s(0);
  for (size_t i = 0; i < m.rows(); ++i) s = s + m(i, i);
  return s;
}

// Independent reference: every 2x2 matrix over Z/q with the given det, counted directly.
int64_t count_gl2(int64_t q, int64_t p) {
  int64_t n = 0;
  for (int64_t a = 0; a < q; ++a)
    for (int64_t b = 0; b < q; ++b)
      for (int64_t c = 0; c < q; ++c)
        for (int64_t d = 0; d < q; ++d) n += gcd64(mod(a * d - b * c, q), p) == 1;
  return n;
}

}  // namespace

TEST_CASE("classification when a_p is nonzero") {
  auto e11 = only_form(DirichletCharacter(11), 11, 2);
  auto lc = classify(e11);
  CHECK(lc.kind == LocalComponent::Kind::Special);
  REQUIRE(lc.chi1.has_value());
  CHECK(lc.chi1->value_at_p == NfElem(-1) * NfElem(-1));
  CHECK(lc.chi1->p_exponent == 0);
  CHECK(lc.chi1->conductor_exponent() == 0);

  auto chi = enumerate_characters(13);
  int checked = 0;
  for (const auto& eps : chi) {
    if (eps.order() != 6) continue;
    for (auto& f : newforms(eps, 13, 2)) {
      auto c = classify(f);
      CHECK(c.kind == LocalComponent::Kind::PrincipalSeries);
      REQUIRE(c.chi2.has_value());
      CHECK(c.chi2->conductor_exponent() == 1);
      // chi1(p) chi2(p) = eps_N(p), which is 1 at prime level.
      CHECK(c.chi1->value_at_p * c.chi2->value_at_p == NfElem(1));
      ++checked;
    }
  }
  CHECK(checked > 0);

  Newform f = level50();
  CHECK(classify(f).kind == LocalComponent::Kind::Supercuspidal);
}

TEST_CASE("integer lifts") {
  for (int64_t N : {1, 2, 4, 7})
    for (int64_t pM : {5, 9, 8}) {
      if (gcd64(N, pM) != 1) continue;
      for (int64_t a = 0; a < pM; ++a)
        for (int64_t b = 0; b < pM; b += 2)
          for (int64_t c = 0; c < pM; ++c) {
            if (gcd64(a, pM) != 1) continue;
            const int64_t d = mod((1 + b * c) * inverse_mod(a, pM), pM);
            Mat2 m = lift_to_integer_matrix(a, b, c, d, pM, N);
            REQUIRE(m.det() == 1);
            const int64_t M = pM * N;
            auto at = [&](const Rational& x) { return mod(x.get_num().get_si(), M); };
            CHECK(mod(at(m.a), pM) == a);
            CHECK(mod(at(m.b), pM) == b);
            CHECK(mod(at(m.c), pM) == c);
            CHECK(mod(at(m.d), pM) == d);
            CHECK(mod(at(m.a), N) == mod(1, N));
            CHECK(mod(at(m.c), N) == 0);
          }
    }
}

TEST_CASE("level 50: the representation of GL_2(Z/5)") {
  auto t = build_cuspidal_type(level50());
  CHECK(t.k_class == KClass::Unramified);
  CHECK(t.n == 1);
  CHECK(t.dim() == 4);
  CHECK(t.period == 1);
  CHECK(t.rho_central == NfMatrix::identity(4));
  CHECK(tr(rho_on_sk(t, {0, 1, 1, 0, 1})) == NfElem(-1));
  CHECK(tr(rho_on_sk(t, {0, 0, -1, 1, 0})) == NfElem(0));
  CHECK(commutant_dimension(t) == 1);

  // Restricted to S(K) alone the representation is already irreducible.
  std::vector<std::pair<NfMatrix, NfMatrix>> pairs;
  for (const auto& [g, m] : t.sk_gens) pairs.emplace_back(m, m);
  CHECK(solve_intertwiners(pairs).size() == 1);

  auto table = character_table(t);
  int64_t total = 0;
  for (const auto& e : table) total += e.size;
  CHECK(total == 480);
  CHECK(total == count_gl2(5, 5));
  const std::vector<std::pair<KElement, long>> expected{
      {{0, 1, 0, 0, 1}, 4}, {{0, 2, 0, 0, 1}, 0}, {{0, 4, 0, 0, 1}, 0}, {{0, 1, 1, 0, 1}, -1},
      {{0, 0, 2, 1, 0}, -2}, {{0, 0, 1, 1, 2}, 1}, {{0, 0, 2, 1, 2}, 1}};
  for (const auto& [g, v] : expected) {
    CHECK(table[class_of(t, table, g)].trace == NfElem(v));
    CHECK(tr(rho_at(t, g)) == NfElem(v));
  }
  // Scalars act trivially: the representation factors through PGL_2.
  for (int64_t z = 1; z < 5; ++z) CHECK(rho_at(t, {0, z, 0, 0, z}) == NfMatrix::identity(4));
}

TEST_CASE("homomorphism and central character") {
  for (Newform f : {level50(), only_form(DirichletCharacter(27), 3, 2), only_form(DirichletCharacter(8), 2, 4)}) {
    auto t = build_cuspidal_type(f);
    auto rep = verify_homomorphism(t, 100, 7);
    CHECK(rep.pairs == 100);
    CHECK(commutant_dimension(t) == 1);
    // Scalars in Z_p^x act by eps_p = omega_p^-1.
    for (int64_t z = 1; z < t.modulus; ++z) {
      if (gcd64(z, t.p) != 1) continue;
      CHECK(rho_at(t, {0, z, 0, 0, z}) == t.central.on_units(z) * NfMatrix::identity(t.dim()));
    }
    // Diagonal elements act on sigma through eps_p of the lower-right entry.
    NfVec e0(t.dim(), NfElem(0));
    e0[0] = NfElem(1);
    for (int64_t a = 1; a < t.modulus; ++a)
      for (int64_t d = 1; d < t.modulus; ++d) {
        if (gcd64(a * d, t.p) != 1) continue;
        NfVec w = e0;
        w[0] = t.central.on_units(d);
        CHECK(rho_at(t, {0, a, 0, 0, d}) * e0 == w);
      }
    CHECK((t.k_class == KClass::Unramified ? 2 * t.n : t.n + 1) == t.r);
  }
}

TEST_CASE("level 81: a trace on the non-split torus") {
  auto t = build_cuspidal_type(only_form(DirichletCharacter(81), 3, 2));
  CHECK(t.k_class == KClass::Unramified);
  CHECK(t.n == 2);
  CHECK(t.dim() == 6);
  NfElem x = tr(rho_at(t, {0, 1, -1, 2, 0}));
  CHECK(x * x == NfElem(3));
  CHECK(t.group_order() == count_gl2(9, 3));
}

TEST_CASE("levels 8 and 24: one-dimensional ramified types") {
  auto f = build_cuspidal_type(only_form(DirichletCharacter(8), 2, 4));
  CHECK(f.k_class == KClass::Ramified);
  CHECK(f.dim() == 1);
  for (int64_t b : {0, 1})
    for (int64_t c : {0, 1})
      for (int64_t a : {1, -1})
        CHECK(rho_at(f, {0, a, b, c, a})(0, 0) == NfElem((b + c) % 2 == 0 ? 1 : -1));
  CHECK(f.rho_central(0, 0) == NfElem(1));

  // The level 24 curve: the local component at 2 is the same up to Pi -> -1.
  Newform g;
  for (auto& h : newforms(DirichletCharacter(24), 2, 2)) g = h;
  auto tg = build_cuspidal_type(g);
  CHECK(tg.dim() == 1);
  CHECK(tg.rho_central(0, 0) == NfElem(-1));
  for (int64_t b : {0, 1})
    for (int64_t c : {0, 1}) CHECK(rho_at(tg, {0, 1, b, c, 1}) == rho_at(f, {0, 1, b, c, 1}));
}
