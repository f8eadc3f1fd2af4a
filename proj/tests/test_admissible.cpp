#include "doctest.h"
#include "lcomp/admissible.hpp"
#include "lcomp/select.hpp"

using namespace lcomp;

namespace {

Newform form(const std::string& chi, int64_t level, int64_t p, int k, const std::vector<std::string>& cs = {}) {
  auto fs = find_newforms(parse_character(chi, level), p, k, cs);
  REQUIRE(fs.size() == 1);
  return fs[0];
}

NfElem tr(const NfMatrix& m) {
  NfElem s(0);
  for (size_t i = 0; i < m.rows(); ++i) s = s + m(i, i);
  return s;
}

const ThetaValue& theta(const AdmissiblePair& a, const std::string& prefix) {
  for (const auto& t : a.theta)
    if (t.element.rfind(prefix, 0) == 0) return t;
  FAIL("missing theta value " << prefix);
  return a.theta.front();
}

// Independent order check: x^k = 1 and x^(k/q) != 1 for primes q | k.
bool has_order(const NfElem& x, int64_t k) {
  if (!(x.pow(k) == NfElem(1))) return false;
  for (int64_t q = 2; q <= k; ++q)
    if (k % q == 0 && is_prime(q) && x.pow(k / q) == NfElem(1)) return false;
  return true;
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(root_of_unity_order(NfElem(1)) == 1);
  CHECK(root_of_unity_order(NfElem(-1)) == 2);
  CHECK_FALSE(root_of_unity_order(NfElem(2)).has_value());
  CHECK(root_of_unity_order(QuadraticRoot{NfElem(-1), NfElem(1)}) == 3);
  CHECK(root_of_unity_order(QuadraticRoot{NfElem(1), NfElem(1)}) == 6);
  // x^2 + 1 splits over Q(i): lcm of the orders of i and -i.
  FieldPtr Qi = NumberField::make(qpoly({1, 0, 1}), "i");
  NfElem i = NfElem::generator(Qi);
  CHECK(root_of_unity_order(QuadraticRoot{NfElem(0), NfElem(1)}) == 4);
  CHECK(root_of_unity_order(i) == 4);
  CHECK(has_order(i, 4));
  CHECK_FALSE(root_of_unity_order(QuadraticRoot{NfElem(3), NfElem(1)}).has_value());
}

TEST_CASE("level 50: unramified E and theta of order 3") {
  auto t = build_cuspidal_type(form("trivial", 50, 5, 2, {"a2=-1"}));
  auto a = identify_pair(t);
  CHECK(a.E.kind == QuadraticExtension::Kind::Unramified);
  CHECK(a.iota == -1);
  const auto& th = theta(a, "alpha");
  REQUIRE(th.root.has_value());
  CHECK(*th.root == QuadraticRoot{NfElem(-1), NfElem(1)});
  CHECK(th.order == 3);
  REQUIRE(th.image.has_value());
  CHECK(*th.image == KElement{0, 1, 4, 2, 0});
  CHECK(a.checked.size() >= 3);
  CHECK_FALSE(detect_exceptional(t));
  // The same pair from a user-supplied minimal element: x^2 - 2x + 3 generates too.
  auto b = identify_pair(t, std::make_pair<int64_t, int64_t>(2, 3));
  CHECK(theta(b, "alpha").order == 3);
  CHECK_THROWS_AS(identify_pair(t, std::make_pair<int64_t, int64_t>(2, 1)), UsageError);
}

TEST_CASE("level 25 weight 3: theta(alpha) of order 24") {
  Newform f = form("5:2=1/4", 25, 5, 3);
  REQUIRE(f.hecke_field);
  CHECK(f.hecke_field->modulus() == qpoly({9, 0, 0, 0, 1}));
  const NfElem lambda = eigenvalue(f, 2), i = lambda * lambda / NfElem(3);
  CHECK(i * i == NfElem(-1));
  // i is the character value at 2.
  CHECK(f.character_value(2) == i);
  auto t = build_cuspidal_type(f);
  auto a = identify_pair(t);
  const auto& th = theta(a, "alpha");
  CHECK(tr(rho_at(t, *th.image)) == NfElem(-1) * lambda);
  CHECK(*th.root == QuadraticRoot{lambda, i});
  CHECK(th.order == 24);
}

TEST_CASE("level 81: theta(alpha) a root of x^2 + sqrt(3) x + 1") {
  Newform f = form("trivial", 81, 3, 2);
  const NfElem s3 = eigenvalue(f, 2);
  CHECK(s3 * s3 == NfElem(3));
  auto t = build_cuspidal_type(f);
  auto a = identify_pair(t);
  CHECK(a.iota == 1);
  const auto& th = theta(a, "alpha");
  CHECK(*th.image == KElement{0, 1, 8, 2, 0});
  CHECK(tr(rho_at(t, *th.image)) == NfElem(-1) * s3);
  CHECK(*th.root == QuadraticRoot{NfElem(-1) * s3, NfElem(1)});
  CHECK(th.order == 12);
}

TEST_CASE("ramified pairs at levels 27 and 54") {
  auto t = build_cuspidal_type(form("trivial", 27, 3, 2));
  auto tw = quadratic_self_twists(t);
  bool ramified_found = false;
  for (const auto& c : tw) ramified_found = ramified_found || !c.unit_part.is_trivial();
  CHECK(ramified_found);
  CHECK_FALSE(detect_exceptional(t));
  auto a = identify_pair(t);
  CHECK(a.E.kind == QuadraticExtension::Kind::Ramified);
  CHECK(a.E.d == -3);
  const auto& s = theta(a, "sqrt(-3)");
  CHECK(s.value == NfElem(-1));
  CHECK(theta(a, "1+sqrt(-3)").order == 3);
  CHECK(a.checked.size() == 6);
  CHECK(a.unresolved.empty());

  int n54 = 0;
  for (auto& f : newforms(DirichletCharacter(54), 3, 2)) {
    if (!is_zero(eigenvalue(f, 3))) continue;
    auto b = identify_pair(build_cuspidal_type(f));
    CHECK(b.E.d == 3);
    ++n54;
  }
  CHECK(n54 == 2);
}

TEST_CASE("level 8 is exceptional and a twist of level 24") {
  auto f = build_cuspidal_type(form("trivial", 8, 2, 4));
  auto g = build_cuspidal_type(form("trivial", 24, 2, 2));
  CHECK(detect_exceptional(f));
  CHECK(detect_exceptional(g));
  auto chi = twist_relation(f, g);
  REQUIRE(chi.has_value());
  CHECK(chi->unit_part.is_trivial());
  CHECK(chi->p_power == 1);
  CHECK(chi->value == NfElem(-1));
  auto self = twist_relation(f, f);
  REQUIRE(self.has_value());
  CHECK(self->unit_part.is_trivial());
  CHECK(self->value == NfElem(1));
  CHECK_THROWS_AS(identify_pair(f), UsageError);

  auto e = build_cuspidal_type(form("trivial", 50, 5, 2, {"a2=-1"}));
  CHECK_THROWS_AS(twist_relation(e, f), UsageError);
  CHECK(twist_relation(e, e).has_value());
}

TEST_CASE("orders of theta(alpha) for conductor 25") {
  struct Row {
    std::string chi;
    int64_t level;
    int k;
    std::vector<std::string> cs;
    int64_t order;
  };
  const std::vector<Row> rows{{"trivial", 50, 2, {"a2=-1"}, 3},
                              {"trivial", 25, 4, {"a2=1", "a3=7"}, 6},
                              {"5:2=1/4", 50, 3, {"a2~x^2+2x+2"}, 8},
                              {"5:2=2/4", 25, 4, {"a2~x^2+1"}, 12},
                              {"5:2=1/4", 25, 3, {}, 24}};
  for (const auto& r : rows) {
    Newform f = form(r.chi, r.level, 5, r.k, r.cs);
    auto t = build_cuspidal_type(f);
    auto a = identify_pair(t);
    const auto& th = theta(a, "alpha");
    CHECK_MESSAGE(th.order == r.order, f.label());
    // The order always lies in {3, 6, 8, 12, 24}: it divides 24 and not 4.
    CHECK(24 % *th.order == 0);
    CHECK(4 % *th.order != 0);
    // theta(alpha) theta(alpha^s) is the central value at the norm.
    CHECK(th.root->n == t.central.on_units(t.det(*th.image).second));
    for (const auto& m : a.checked) CHECK(m.trace == m.predicted);
    CHECK(a.checked.size() >= 3);
  }
}
