#include "doctest.h"
#include "lcomp/properties.hpp"
#include "lcomp/select.hpp"

using namespace lcomp;

namespace {

bool all_pass(const std::vector<PropertyCheck>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

bool passes(const std::vector<PropertyCheck>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return c.pass;
  FAIL("no check named " << name);
  return false;
}

}  // namespace

TEST_CASE("property suite passes on a genuine type and catches a corrupted one") {
  auto t = build_cuspidal_type(find_newforms(DirichletCharacter(50), 5, 2, {"a2=-1"}).at(0));
  CHECK(all_pass(type_properties(t, 30)));

  // Negating rho(diag(2, 1)) breaks the action on sigma and the trace formula,
  // but keeps a representation of S(K).
  CuspidalType bad = t;
  bad.lambda[0] = NfElem(-1) * bad.lambda[0];
  bad.sk_cache = std::make_shared<std::map<KElement, NfMatrix>>();
  const auto cs = type_properties(bad, 30);
  CHECK_FALSE(passes(cs, "diag(a, d) sigma = eps_p(d) sigma"));
  CHECK(passes(cs, "dim X_f = phi(p^floor(r/2))"));
  CHECK(passes(cs, "T_m R_chi = chi(m) R_chi T_m"));
}

TEST_CASE("p = 2 types skip the admissible-pair check") {
  auto t = build_cuspidal_type(find_newforms(DirichletCharacter(8), 2, 4).at(0));
  const auto cs = type_properties(t, 20);
  CHECK(all_pass(cs));
  for (const auto& c : cs) CHECK(c.name != "trace formula at minimal elements");
}
