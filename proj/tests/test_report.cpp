#include <set>
#include <sstream>

#include "doctest.h"
#include "lcomp/report.hpp"

using namespace lcomp;

namespace {

JobSpec job(int64_t level, int64_t p, int k, std::vector<std::string> cs = {}) {
  JobSpec j;
  j.level = level;
  j.p = p;
  j.weight = k;
  j.constraints = std::move(cs);
  return j;
}

std::string trim(const std::string& s) { return s.substr(std::min(s.find_first_not_of(' '), s.size())); }

// Every scalar leaf and field element of the tree must appear as a "key: value" line.
void leaves(const Json& j, std::vector<std::string>& out) {
  if (!j.is_object() && !j.is_array()) return;
  if (j.is_array()) {
    for (const auto& x : j) leaves(x, out);
    return;
  }
  if (j.contains("entries")) return;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && v.contains("coords")) out.push_back(k + ": " + v["text"].get<std::string>());
    else if (v.is_string()) out.push_back(k + ": " + v.get<std::string>());
    else if (v.is_number() || v.is_boolean()) out.push_back(k + ": " + v.dump());
    else leaves(v, out);
  }
}

}  // namespace

TEST_CASE("field elements and matrices round-trip") {
  FieldPtr F = NumberField::make(qpoly({9, 0, 0, 0, 1}), "a");
  const NfElem a = NfElem::generator(F);
  for (const NfElem& x : {NfElem(0), NfElem(make_rational(-7, 3)), a, a * a / NfElem(3) - NfElem(1), a.pow(3)}) {
    const Json j = encode(x);
    const Json back = Json::parse(j.dump());
    CHECK(back.dump() == j.dump());
    CHECK(decode_element(back) == x);
    CHECK(decode_element(back, F) == x);
    CHECK(back["text"] == x.to_string());
  }
  CHECK(encode(a)["coords"] == Json::array({"0", "1", "0", "0"}));
  CHECK(encode(a)["field"] == "x^4 + 9");
  NfMatrix m(2, 3);
  m(0, 1) = a;
  m(1, 2) = NfElem(make_rational(1, 2));
  CHECK(decode_matrix(Json::parse(encode(m).dump())) == m);
  CHECK_THROWS_AS(decode_element(Json{{"text", "?"}, {"field", "x"}, {"coords", {"1", "2"}}}), UsageError);
}

TEST_CASE("level 50: supercuspidal, unramified, dim 4, theta of order 3") {
  JobSpec j = job(50, 5, 2, {"a2=-1"});
  j.admissible_pair = true;
  const Json out = run_job(j);
  CHECK(out["status"] == "ok");
  const Json& r = out["reports"][0];
  CHECK(r["classification"]["kind"] == "supercuspidal");
  CHECK(r["type"]["K"] == "unramified");
  CHECK(r["type"]["n"] == 1);
  CHECK(r["type"]["dim"] == 4);
  CHECK(r["admissible_pair"]["theta"][0]["order"] == 3);
  for (const auto& c : r["type"]["properties"]) CHECK_MESSAGE(c["pass"] == true, c["name"]);
}

TEST_CASE("level 27 and level 8") {
  JobSpec j27 = job(27, 3, 2);
  j27.admissible_pair = true;
  const Json a = run_job(j27)["reports"][0];
  CHECK(a["type"]["K"] == "ramified");
  CHECK(a["type"]["dim"] == 2);
  CHECK(a["admissible_pair"]["E"] == "Q_3(sqrt(-3))");

  const Json b = run_job(job(8, 2, 4))["reports"][0];
  CHECK(b["classification"]["kind"] == "supercuspidal");
  CHECK(b["type"]["K"] == "ramified");
  CHECK(b["type"]["dim"] == 1);
  CHECK(b["exceptional"] == true);
}

TEST_CASE("reports are deterministic and round-trip") {
  JobSpec j = job(27, 3, 2);
  j.admissible_pair = true;
  j.char_table = true;
  const std::string first = run_job(j).dump(2), second = run_job(j).dump(2);
  CHECK(first == second);
  CHECK(Json::parse(first).dump(2) == first);
  // Decoded type data reproduces the matrices that were encoded.
  const Json r = Json::parse(first)["reports"][0];
  const auto t = build_cuspidal_type(newforms(DirichletCharacter(27), 3, 2).at(0));
  CHECK(decode_matrix(r["type"]["rho_central"]) == t.rho_central);
  CHECK(decode_matrix(r["type"]["sk_generators"][0]["image"]) == t.sk_gens[0].second);
}

TEST_CASE("text and structured output carry the same fields") {
  JobSpec j = job(27, 3, 2);
  j.admissible_pair = true;
  const Json out = run_job(j);
  std::set<std::string> lines;
  std::istringstream text(render_text(out));
  for (std::string l; std::getline(text, l);) lines.insert(trim(l));
  std::vector<std::string> expected;
  leaves(out, expected);
  CHECK(expected.size() > 50);
  for (const auto& e : expected) CHECK_MESSAGE(lines.count(e) == 1, e);
}

TEST_CASE("selectors, limits and errors") {
  CHECK_THROWS_AS(run_job(job(50, 5, 2, {"a2=5"})), NotFoundError);
  CHECK_THROWS_AS(run_job(job(50, 7, 2)), UsageError);
  CHECK_THROWS_AS(run_job(job(50, 4, 2)), UsageError);
  CHECK_THROWS_AS(run_job(job(50, 5, 1)), UsageError);
  JobSpec bad = job(50, 5, 2);
  bad.orbit = 7;
  CHECK_THROWS_AS(run_job(bad), NotFoundError);

  // Both supercuspidal orbits at level 54, in canonical order, then one of them by index.
  const Json all = run_job(job(54, 3, 2, {"a3=0"}));
  REQUIRE(all["reports"].size() == 2);
  CHECK(all["reports"][0]["orbit"] == 0);
  CHECK(all["reports"][1]["orbit"] == 1);
  JobSpec one = job(54, 3, 2, {"a3=0"});
  one.orbit = 1;
  const Json single = run_job(one);
  CHECK(single["reports"].size() == 1);
  CHECK(single["reports"][0].dump() == all["reports"][1].dump());

  JobSpec small = job(50, 5, 2, {"a2=-1"});
  small.char_table = true;
  small.class_limit = 100;
  const Json partial = run_job(small);
  CHECK(partial["status"] == "size-limit");
  CHECK(partial["reports"][0]["character_table"]["limit_exceeded"] == true);
  CHECK(partial["reports"][0]["type"]["dim"] == 4);
}

TEST_CASE("non-supercuspidal reports carry no type") {
  const Json r = run_job(job(11, 11, 2))["reports"][0];
  CHECK(r["classification"]["kind"] == "special");
  CHECK_FALSE(r.contains("type"));
  CHECK(r["classification"]["chi1"]["value_at_p"]["text"] == "1");
}

TEST_CASE("all characters") {
  JobSpec j = job(13, 13, 2);
  j.character = "all";
  const Json out = run_job(j);
  std::set<std::string> kinds;
  for (const auto& r : out["reports"]) kinds.insert(r["classification"]["kind"]);
  CHECK(kinds == std::set<std::string>{"principal series"});
  CHECK(out["orbits_matched"].get<size_t>() == out["reports"].size());
}
