// One PASS/FAIL line per acceptance criterion; exact comparisons throughout.
#include <chrono>
#include <functional>
#include <iostream>

#include "lcomp/properties.hpp"
#include "lcomp/select.hpp"

using namespace lcomp;

namespace {

struct Criterion {
  std::vector<std::string> failed;
  size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failed.push_back(what);
  }
};

std::vector<CuspidalType> computed;  // every supercuspidal type built, for criterion 7

Newform one(const std::string& chi, int64_t level, int64_t p, int k, const std::vector<std::string>& cs = {}) {
  auto fs = find_newforms(parse_character(chi, level), p, k, cs);
  if (fs.size() != 1) throw ConsistencyError(std::to_string(fs.size()) + " orbits at level " + std::to_string(level));
  return fs[0];
}

const CuspidalType& keep(CuspidalType t) {
  computed.push_back(std::move(t));
  return computed.back();
}

NfElem tr(const NfMatrix& m) {
  NfElem s(0);
  for (size_t i = 0; i < m.rows(); ++i) s = s + m(i, i);
  return s;
}

const ThetaValue* theta(const AdmissiblePair& a, const std::string& prefix) {
  for (const auto& t : a.theta)
    if (t.element.rfind(prefix, 0) == 0) return &t;
  return nullptr;
}

void example1(Criterion& c) {
  Newform f = one("trivial", 50, 5, 2, {"a2=-1"});
  const ModularSymbolSpace& M = *f.space;
  c.expect(M.group().index() == 360, "index 360");
  c.expect(M.dim() == 31, "modular symbols of dimension 31");
  const CuspidalType& t = keep(build_cuspidal_type(f));
  c.expect(t.dim() == 4, "dim X_f = 4");
  const auto nw = new_subspace(M, 5);
  c.expect(nw.dim() == 18, "5-new subspace of dimension 18");
  bool inside = true;
  for (const auto& v : t.ts.basis) {
    std::vector<NfVec> rows;
    for (const auto& w : nw.vectors()) rows.push_back(to_nf(w));
    rows.push_back(v);
    inside = inside && rank(NfMatrix::from_rows(rows, M.dim())) == nw.dim();
  }
  c.expect(inside, "X_f inside the 5-new subspace");
  // Intertwiners between X_f and its conjugate by diag(2, 1), on the SL_2 generators.
  std::vector<std::pair<NfMatrix, NfMatrix>> pairs;
  for (const auto& [g, m] : t.sk_gens)
    pairs.emplace_back(m, rho_on_sk(t, t.normalize({0, g.a, 2 * g.b, g.c * inverse_mod(2, 5), g.d})));
  c.expect(solve_intertwiners(pairs).size() == 1, "intertwiner space of dimension 1");
  const std::vector<std::pair<KElement, long>> table{{{0, 1, 0, 0, 1}, 4}, {{0, 2, 0, 0, 1}, 0}, {{0, 4, 0, 0, 1}, 0},
                                                     {{0, 1, 1, 0, 1}, -1}, {{0, 0, 2, 1, 0}, -2}, {{0, 0, 1, 1, 2}, 1},
                                                     {{0, 0, 2, 1, 2}, 1}};
  const auto classes = character_table(t);
  for (const auto& [g, v] : table) {
    c.expect(tr(rho_at(t, g)) == NfElem(v), "trace at " + g.to_string());
    c.expect(classes[class_of(t, classes, g)].trace == NfElem(v), "class trace at " + g.to_string());
  }
  const auto a = identify_pair(t);
  c.expect(a.E.kind == QuadraticExtension::Kind::Unramified, "E unramified");
  const auto* th = theta(a, "alpha");
  c.expect(th && th->order == 3, "theta(alpha) of order 3");
}

void example2(Criterion& c) {
  Newform f = one("5:2=1/4", 25, 5, 3);
  c.expect(f.hecke_field && f.hecke_field->modulus() == qpoly({9, 0, 0, 0, 1}), "Hecke field x^4 + 9");
  const NfElem lambda = eigenvalue(f, 2), i = lambda * lambda / NfElem(3);
  c.expect(i * i == NfElem(-1), "i = lambda^2 / 3");
  c.expect(f.character_value(2) == i, "i is the character value at 2");
  const auto a = identify_pair(keep(build_cuspidal_type(f)));
  const auto* th = theta(a, "alpha");
  c.expect(th && th->root == QuadraticRoot{lambda, i}, "theta(alpha) a root of x^2 - lambda x + i");
  c.expect(th && th->order == 24, "order 24");
}

void example3(Criterion& c) {
  Newform f = one("trivial", 81, 3, 2);
  const NfElem s3 = eigenvalue(f, 2);
  c.expect(s3 * s3 == NfElem(3), "a_2 = sqrt 3");
  const CuspidalType& t = keep(build_cuspidal_type(f));
  c.expect(t.dim() == 6, "dim X_f = 6");
  int64_t total = 0;
  for (const auto& e : character_table(t)) total += e.size;
  c.expect(total == 3888 && t.group_order() == 3888, "GL_2(Z/9) of order 3888 enumerated");
  const auto a = identify_pair(t);
  const auto* th = theta(a, "alpha");
  c.expect(th && th->image && tr(rho_at(t, *th->image)) == NfElem(-1) * s3, "trace -sqrt 3 at alpha");
  c.expect(th && th->root == QuadraticRoot{NfElem(-1) * s3, NfElem(1)}, "x^2 + sqrt(3) x + 1");
}

void example4(Criterion& c) {
  const CuspidalType& t = keep(build_cuspidal_type(one("trivial", 27, 3, 2)));
  c.expect(t.dim() == 2, "dim X_f = 2");
  c.expect(!detect_exceptional(t), "not exceptional");
  bool ramified = false;
  for (const auto& q : quadratic_self_twists(t)) ramified = ramified || !q.unit_part.is_trivial();
  c.expect(ramified, "self-twist by the ramified quadratic character");
  const auto a = identify_pair(t);
  c.expect(a.E.kind == QuadraticExtension::Kind::Ramified && a.E.d == -3, "E = Q_3(sqrt -3)");
  const auto* s = theta(a, "sqrt(-3)");
  c.expect(s && s->value == NfElem(-1), "theta(sqrt -3) = -1");
  const auto* u = theta(a, "1+sqrt(-3)");
  c.expect(u && u->order == 3, "theta(1 + sqrt -3) of order 3");
  int n54 = 0;
  for (auto& f : find_newforms(DirichletCharacter(54), 3, 2, {"a3=0"})) {
    const auto b = identify_pair(keep(build_cuspidal_type(f)));
    c.expect(b.E.kind == QuadraticExtension::Kind::Ramified && b.E.d == 3, "level 54 pair over Q_3(sqrt 3)");
    ++n54;
  }
  c.expect(n54 == 2, "two level 54 forms");
}

void example6(Criterion& c) {
  const CuspidalType& f = keep(build_cuspidal_type(one("trivial", 8, 2, 4)));
  const CuspidalType& g = keep(build_cuspidal_type(one("trivial", 24, 2, 2)));
  c.expect(f.dim() == 1 && g.dim() == 1, "one-dimensional type spaces");
  for (int64_t a : {1, -1})
    for (int64_t b : {0, 1})
      for (int64_t cc : {0, 1})
        c.expect(rho_at(f, {0, a, b, cc, a})(0, 0) == NfElem((b + cc) % 2 == 0 ? 1 : -1),
                 "(-1)^(b+c) at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc));
  c.expect(f.rho_central(0, 0) == NfElem(1), "rho_f(Pi) = 1");
  c.expect(g.rho_central(0, 0) == NfElem(-1), "rho_g(Pi) = -1");
  const auto chi = twist_relation(f, g);
  c.expect(chi && chi->unit_part.is_trivial() && chi->p_power == 1 && chi->value == NfElem(-1),
           "twist by the unramified quadratic character");
  c.expect(detect_exceptional(f), "rho_f exceptional");
}

void table2(Criterion& c) {
  struct Row {
    std::string chi;
    int64_t level;
    int k;
    std::vector<std::string> cs;
    int64_t order;
  };
  for (const auto& r : std::vector<Row>{{"trivial", 50, 2, {"a2=-1"}, 3},
                                        {"trivial", 25, 4, {"a2=1", "a3=7"}, 6},
                                        {"5:2=1/4", 50, 3, {"a2~x^2+2x+2"}, 8},
                                        {"5:2=2/4", 25, 4, {"a2~x^2+1"}, 12},
                                        {"5:2=1/4", 25, 3, {}, 24}}) {
    auto fs = find_newforms(parse_character(r.chi, r.level), 5, r.k, r.cs);
    c.expect(fs.size() == 1, "one orbit at level " + std::to_string(r.level) + " weight " + std::to_string(r.k));
    if (fs.size() != 1) continue;
    const auto a = identify_pair(keep(build_cuspidal_type(fs[0])));
    const auto* th = theta(a, "alpha");
    c.expect(th && th->order == r.order, "order " + std::to_string(r.order));
  }
}

void properties(Criterion& c) {
  for (const auto& t : computed)
    for (const auto& p : type_properties(t, 100, 11)) c.expect(p.pass, t.ts.f.label() + ": " + p.name + " " + p.detail);
  c.expect(computed.size() >= 13, "all example types covered");
}

void non_supercuspidal(Criterion& c) {
  Newform e = one("trivial", 11, 11, 2);
  const auto lc = classify(e);
  c.expect(lc.kind == LocalComponent::Kind::Special, "level 11 special");
  c.expect(lc.chi1 && lc.chi1->unit_part.is_trivial(), "chi unramified");
  c.expect(lc.chi1 && eigenvalue(e, 11) == NfElem(1) && lc.chi1->value_at_p == eigenvalue(e, 11), "chi(11) = a_11 = 1");
  int ps = 0;
  for (const auto& eps : enumerate_characters(13)) {
    if (eps.order() != 6) continue;
    for (auto& f : newforms(eps, 13, 2)) {
      const auto c13 = classify(f);
      c.expect(c13.kind == LocalComponent::Kind::PrincipalSeries, "level 13 principal series");
      c.expect(c13.chi2 && c13.chi2->unit_part == eps.inverse(), "chi2 on units is eps_p^-1");
      c.expect(c13.chi2 && c13.chi2->conductor_exponent() == 1, "cond(chi2) = p = cond(eps_p)");
      ++ps;
    }
  }
  c.expect(ps > 0, "level 13 forms with a character of conductor 13");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"Example 1 (level 50, k = 2, p = 5)", example1},
      {"Example 2 (level 25, k = 3, p = 5)", example2},
      {"Example 3 (level 81, k = 2, p = 3)", example3},
      {"Example 4 (level 27 and 54, p = 3)", example4},
      {"Example 6 (levels 8 and 24, p = 2)", example6},
      {"Table 2 orders 3, 6, 8, 12, 24", table2},
      {"property suites on every computed type", properties},
      {"non-supercuspidal classification", non_supercuspidal}};
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failed.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failed.empty();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << c.checks
              << " checks, " << static_cast<int>(secs * 10) / 10.0 << " s)";
    for (const auto& f : c.failed) std::cout << "\n    failed: " << f;
    std::cout << std::endl;
  }
  return failures ? 1 : 0;
}
