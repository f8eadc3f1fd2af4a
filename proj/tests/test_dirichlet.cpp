#include "doctest.h"
#include "lcomp/dirichlet.hpp"

using namespace lcomp;

namespace {

// Oracle: the least divisor d such that chi(u) depends only on u mod d.
int64_t brute_conductor(const DirichletCharacter& chi) {
  int64_t m = chi.modulus();
  for (int64_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    bool ok = true;
    for (int64_t u = 0; u < m && ok; ++u)
      for (int64_t v = u + d; v < m && ok; v += d)
        if (chi.is_unit(u) && chi.is_unit(v) && !(chi(u) == chi(v))) ok = false;
    if (ok) return d;
  }
  return m;
}

}  // namespace

TEST_CASE("unit group decomposition") {
  for (int64_t m : {1, 2, 4, 5, 8, 9, 16, 24, 50, 81, 100}) {
    UnitGroup g = UnitGroup::of(m);
    CHECK(g.order() == euler_phi(m));
    // Every unit has a logarithm and it reproduces the unit.
    for (int64_t u : g.units()) {
      if (m == 1) continue;
      auto k = g.log(u);
      int64_t x = 1;
      for (size_t i = 0; i < k.size(); ++i) x = x * power_mod(g.gens[i], k[i], m) % m;
      CHECK(x == u);
    }
  }
}

TEST_CASE("conductors") {
  CHECK(DirichletCharacter(50).conductor() == 1);
  // chi mod 5 with chi(2) = i.
  auto chi = DirichletCharacter::from_values(5, {{2, RootOfUnity::make(4, 1)}});
  CHECK(chi.conductor() == 5);
  CHECK(chi.order() == 4);
  // Quadratic character mod 8 with chi(3) = chi(5) = -1.
  auto q8 = DirichletCharacter::from_values(8, {{3, RootOfUnity::make(2, 1)}, {5, RootOfUnity::make(2, 1)}});
  CHECK(q8.conductor() == 8);
  CHECK(q8.conductor() == brute_conductor(q8));
  for (int64_t m : {12, 16, 25, 27, 40}) {
    for (auto& c : enumerate_characters(m)) CHECK(c.conductor() == brute_conductor(c));
  }
}

TEST_CASE("enumeration") {
  auto five = enumerate_characters(5);
  REQUIRE(five.size() == 4);
  std::vector<int64_t> orders;
  for (auto& c : five) orders.push_back(c.order());
  CHECK(orders == std::vector<int64_t>{1, 4, 2, 4});
  CHECK(enumerate_characters(1).size() == 1);
  CHECK(enumerate_characters(1)[0].is_trivial());
  CHECK(enumerate_characters(9).size() == 6);
  for (int64_t m : {8, 15, 24, 36}) {
    auto all = enumerate_characters(m);
    CHECK(static_cast<int64_t>(all.size()) == euler_phi(m));
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  }
}

TEST_CASE("conductor of a product divides the lcm of conductors") {
  auto all = enumerate_characters(24);
  for (auto& a : all)
    for (auto& b : all) {
      int64_t ca = a.conductor(), cb = b.conductor();
      int64_t l = ca / gcd64(ca, cb) * cb;
      CHECK(l % (a * b).conductor() == 0);
    }
}

TEST_CASE("splitting at p") {
  auto s = split_at_p(DirichletCharacter(50), 5);
  CHECK(s.eps_N.modulus() == 2);
  CHECK(s.eps_p.modulus() == 25);
  CHECK(s.eps_N.is_trivial());
  CHECK(s.eps_p.is_trivial());

  auto chi = DirichletCharacter::from_values(5, {{2, RootOfUnity::make(4, 1)}}).extend(25);
  auto s2 = split_at_p(chi, 5);
  CHECK(s2.eps_N.modulus() == 1);
  CHECK(s2.eps_p == chi);

  for (auto& eps : enumerate_characters(24)) {
    auto sp = split_at_p(eps, 2);
    for (int64_t u = 1; u < 24; ++u) {
      if (!eps.is_unit(u)) continue;
      CHECK(eps(u) == sp.eps_N(u) * sp.eps_p(u));
    }
  }
}

TEST_CASE("local component at p") {
  auto triv = local_component(DirichletCharacter(50), 5);
  CHECK(triv.unit_part.is_trivial());
  CHECK(triv.value_at_p.is_one());

  auto chi = DirichletCharacter::from_values(5, {{2, RootOfUnity::make(4, 1)}}).extend(25);
  auto lc = local_component(chi, 5);
  CHECK(lc.unit_part == chi.inverse());
  CHECK(lc.value_at_p.is_one());
  for (int64_t u = 1; u < 25; ++u)
    if (chi.is_unit(u)) CHECK((lc.unit_part(u) * chi(u)).is_one());

  for (auto& eps : enumerate_characters(24)) {
    auto d = local_component(eps, 2);
    auto sp = split_at_p(eps, 2);
    CHECK(d.value_at_p == sp.eps_N(2));
    // The adelic product formula omega(p) = 1 component-wise: eps_N(p) is the value at p.
    for (int64_t u = 1; u < 8; u += 2) CHECK((d.unit_part(u) * sp.eps_p(u)).is_one());
  }
}

TEST_CASE("character values in a number field") {
  FieldPtr qi = NumberField::make(qpoly({1, 0, 1}), "i");
  NfElem z = primitive_root_of_unity(qi, 4);
  CHECK(z * z == NfElem(-1));
  auto chi = DirichletCharacter::from_values(5, {{2, RootOfUnity::make(4, 1)}});
  CHECK(chi.value(2, z, 4) == z);
  CHECK(chi.value(4, z, 4) == NfElem(-1));
  CHECK(chi.value(5, z, 4) == NfElem(0));
  CHECK(chi.parity() == -1);
  CHECK(DirichletCharacter::from_values(5, {{2, RootOfUnity::make(4, 1)}}).pow(3) == chi.inverse());
  CHECK_THROWS_AS(primitive_root_of_unity(qi, 3), DomainError);
}
