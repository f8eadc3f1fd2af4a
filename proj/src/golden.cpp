#include "lcomp/report.hpp"

namespace lcomp {

namespace {

JobSpec job(int64_t level, int64_t p, int k, std::string chi, std::vector<std::string> cs = {}) {
  JobSpec j;
  j.level = level;
  j.p = p;
  j.weight = k;
  j.character = std::move(chi);
  j.constraints = std::move(cs);
  j.admissible_pair = p != 2;
  return j;
}

std::string text(const Json& element) { return element.at("text").get<std::string>(); }
std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

const Json& theta(const Json& report, const std::string& prefix) {
  for (const auto& t : report.at("admissible_pair").at("theta"))
    if (t.at("element").get<std::string>().rfind(prefix, 0) == 0) return t;
  throw ConsistencyError("golden: no theta value for " + prefix);
}

std::string properties(const Json& report) {
  for (const auto& c : report.at("type").at("properties"))
    if (!c.at("pass").get<bool>()) return "fail: " + c.at("name").get<std::string>();
  return "pass";
}

NfElem tr(const NfMatrix& m) {
  NfElem s(0);
  for (size_t i = 0; i < m.rows(); ++i) s = s + m(i, i);
  return s;
}

using Rows = std::vector<GoldenRow>;

void example1(Rows& rows) {
  JobSpec j = job(50, 5, 2, "trivial", {"a2=-1"});
  Json out = run_job(j);
  const Json& r = out["reports"][0];
  rows.push_back({"example 1: orbits", "1", str(out["orbits_matched"])});
  rows.push_back({"example 1: classification", "supercuspidal", str(r["classification"]["kind"])});
  rows.push_back({"example 1: K", "unramified", str(r["type"]["K"])});
  rows.push_back({"example 1: n", "1", str(r["type"]["n"])});
  rows.push_back({"example 1: dim", "4", str(r["type"]["dim"])});
  rows.push_back({"example 1: properties", "pass", properties(r)});
  Newform f = find_newforms(DirichletCharacter(50), 5, 2, {"a2=-1"}).at(0);
  const CuspidalType t = build_cuspidal_type(f);
  std::string traces;
  for (const KElement& g : std::vector<KElement>{
           {0, 1, 0, 0, 1}, {0, 2, 0, 0, 1}, {0, 4, 0, 0, 1}, {0, 1, 1, 0, 1}, {0, 0, 2, 1, 0}, {0, 0, 1, 1, 2}, {0, 0, 2, 1, 2}})
    traces += (traces.empty() ? "" : ",") + tr(rho_at(t, g)).to_string();
  rows.push_back({"example 1: traces on the PGL_2(F_5) classes", "4,0,0,-1,-2,1,1", traces});
  rows.push_back({"example 1: E", "unramified", str(r["admissible_pair"]["E_kind"])});
  const Json& a = theta(r, "alpha");
  rows.push_back({"example 1: theta(alpha) polynomial", "root of x^2 - (-1) x + (1)", str(a["polynomial"]["text"])});
  rows.push_back({"example 1: theta(alpha) order", "3", str(a["order"])});
}

void example2(Rows& rows) {
  Json out = run_job(job(25, 5, 3, "5:2=1/4"));
  const Json& r = out["reports"][0];
  rows.push_back({"example 2: hecke field", "x^4 + 9", str(r["hecke_field"])});
  const NfElem lambda = decode_element(r["eigenvalues"]["a2"]);
  const Json& a = theta(r, "alpha");
  rows.push_back({"example 2: theta(alpha) polynomial", QuadraticRoot{lambda, lambda * lambda / NfElem(3)}.to_string(),
                  str(a["polynomial"]["text"])});
  rows.push_back({"example 2: theta(alpha) order", "24", str(a["order"])});
  rows.push_back({"example 2: properties", "pass", properties(r)});
}

void example3(Rows& rows) {
  Json out = run_job(job(81, 3, 2, "trivial"));
  const Json& r = out["reports"][0];
  const NfElem s3 = decode_element(r["eigenvalues"]["a2"]);
  rows.push_back({"example 3: a2^2", "3", (s3 * s3).to_string()});
  rows.push_back({"example 3: dim", "6", str(r["type"]["dim"])});
  const Json& a = theta(r, "alpha");
  std::string trace = "missing";
  for (const auto& m : r["admissible_pair"]["minimal_elements"])
    if (m["image"] == a["image"]) trace = text(m["trace"]);
  rows.push_back({"example 3: trace at alpha", (NfElem(-1) * s3).to_string(), trace});
  rows.push_back({"example 3: theta(alpha) polynomial", QuadraticRoot{NfElem(-1) * s3, NfElem(1)}.to_string(),
                  str(a["polynomial"]["text"])});
  rows.push_back({"example 3: properties", "pass", properties(r)});
}

void example4(Rows& rows) {
  Json out = run_job(job(27, 3, 2, "trivial"));
  const Json& r = out["reports"][0];
  rows.push_back({"example 4: K", "ramified", str(r["type"]["K"])});
  rows.push_back({"example 4: dim", "2", str(r["type"]["dim"])});
  rows.push_back({"example 4: exceptional", "false", str(r["exceptional"])});
  rows.push_back({"example 4: E", "Q_3(sqrt(-3))", str(r["admissible_pair"]["E"])});
  rows.push_back({"example 4: theta(sqrt(-3))", "-1", text(theta(r, "sqrt(-3)")["value"])});
  rows.push_back({"example 4: theta(1+sqrt(-3)) order", "3", str(theta(r, "1+sqrt(-3)")["order"])});
  rows.push_back({"example 4: properties", "pass", properties(r)});

  Json o54 = run_job(job(54, 3, 2, "trivial", {"a3=0"}));
  std::string es;
  for (const auto& q : o54["reports"]) es += (es.empty() ? "" : ",") + str(q["admissible_pair"]["E"]);
  rows.push_back({"example 4: level 54 pairs", "Q_3(sqrt(3)),Q_3(sqrt(3))", es});
}

void example6(Rows& rows) {
  Json o8 = run_job(job(8, 2, 4, "trivial"));
  Json o24 = run_job(job(24, 2, 2, "trivial"));
  const Json& f = o8["reports"][0];
  const Json& g = o24["reports"][0];
  rows.push_back({"example 6: dims", "1,1", str(f["type"]["dim"]) + "," + str(g["type"]["dim"])});
  rows.push_back({"example 6: rho_f(Pi), rho_g(Pi)", "1,-1",
                  decode_matrix(f["type"]["rho_central"])(0, 0).to_string() + "," +
                      decode_matrix(g["type"]["rho_central"])(0, 0).to_string()});
  rows.push_back({"example 6: exceptional", "true", str(f["exceptional"])});
  const auto tf = build_cuspidal_type(find_newforms(DirichletCharacter(8), 2, 4).at(0));
  const auto tg = build_cuspidal_type(find_newforms(DirichletCharacter(24), 2, 2).at(0));
  auto chi = twist_relation(tf, tg);
  rows.push_back({"example 6: twist", "unramified, chi(2) = -1",
                  !chi ? "none"
                       : std::string(chi->unit_part.is_trivial() ? "unramified" : "ramified") +
                             ", chi(2)" + (chi->p_power == 1 ? "" : "^2") + " = " + chi->value.to_string()});
}

void table2(Rows& rows) {
  struct Row {
    std::string chi;
    int64_t level;
    int k;
    std::vector<std::string> cs;
    std::string order;
  };
  for (const Row& t : std::vector<Row>{{"trivial", 50, 2, {"a2=-1"}, "3"},
                                       {"trivial", 25, 4, {"a2=1", "a3=7"}, "6"},
                                       {"5:2=1/4", 50, 3, {"a2~x^2+2x+2"}, "8"},
                                       {"5:2=2/4", 25, 4, {"a2~x^2+1"}, "12"},
                                       {"5:2=1/4", 25, 3, {}, "24"}}) {
    Json out = run_job(job(t.level, 5, t.k, t.chi, t.cs));
    const std::string name = "table 2: level " + std::to_string(t.level) + " weight " + std::to_string(t.k);
    rows.push_back({name + " orbits", "1", str(out["orbits_matched"])});
    rows.push_back({name + " theta(alpha) order", t.order, str(theta(out["reports"][0], "alpha")["order"])});
  }
}

}  // namespace

std::vector<GoldenRow> golden_suite() {
  Rows rows;
  example1(rows);
  example2(rows);
  example3(rows);
  example4(rows);
  example6(rows);
  table2(rows);
  return rows;
}

}  // namespace lcomp
