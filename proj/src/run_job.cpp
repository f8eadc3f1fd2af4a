#include <chrono>
#include <set>

#include "lcomp/report.hpp"

namespace lcomp {

void validate(const JobSpec& job) {
  if (job.p < 2 || !is_prime(job.p)) throw UsageError("p = " + std::to_string(job.p) + " is not prime");
  if (job.level < 1 || job.level % job.p != 0)
    throw UsageError("p = " + std::to_string(job.p) + " does not divide the level " + std::to_string(job.level));
  if (job.weight < 2) throw UsageError("weight must be at least 2");
  if (job.class_limit < 1) throw UsageError("class limit must be positive");
}

namespace {

// One character per Galois orbit, with the parity forced by the weight.
std::vector<DirichletCharacter> characters_for(const JobSpec& job) {
  if (job.character != "all") return {parse_character(job.character, job.level)};
  const int parity = job.weight % 2 == 0 ? 1 : -1;
  std::vector<DirichletCharacter> out;
  std::set<std::string> seen;
  for (const auto& chi : enumerate_characters(job.level)) {
    if (chi.parity() != parity || seen.count(chi.to_string())) continue;
    for (int64_t j = 1; j <= chi.order(); ++j)
      if (gcd64(j, chi.order()) == 1) seen.insert(chi.pow(j).to_string());
    out.push_back(chi);
  }
  return out;
}

Json kelement(const KElement& g) { return g.to_string(); }

Json encode_type(const CuspidalType& t, const JobSpec& job, bool& consistent) {
  Json j;
  j["K"] = t.k_class == KClass::Unramified ? "unramified" : "ramified";
  j["p"] = t.p;
  j["r"] = t.r;
  j["n"] = t.n;
  j["dim"] = t.dim();
  j["period"] = t.period;
  j["group_order"] = t.group_order();
  j["central_character"] = encode(t.central);
  j["central_generator"] = t.k_class == KClass::Unramified ? "p I" : "Pi = [[0, 1], [-p, 0]]";
  j["rho_central"] = encode(t.rho_central);
  Json gens = Json::array();
  for (const auto& [g, m] : t.sk_gens) gens.push_back(Json{{"element", kelement(g)}, {"image", encode(m)}});
  j["sk_generators"] = gens;
  Json lam = Json::array();
  for (size_t i = 0; i < t.lambda.size(); ++i)
    lam.push_back(Json{{"a", t.lambda_gens[i]}, {"image", encode(t.lambda[i])}});
  j["lambda"] = lam;
  Json props = Json::array();
  for (const auto& c : type_properties(t, job.property_samples)) {
    consistent = consistent && c.pass;
    props.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["properties"] = props;
  return j;
}

Json encode_pair(const AdmissiblePair& a) {
  Json j;
  j["E"] = a.E.to_string();
  j["E_kind"] = a.E.kind == QuadraticExtension::Kind::Unramified ? "unramified" : "ramified";
  if (a.E.kind == QuadraticExtension::Kind::Ramified) j["d"] = a.E.d;
  j["iota"] = a.iota;
  Json th = Json::array();
  for (const auto& v : a.theta) {
    Json e;
    e["element"] = v.element;
    e["image"] = v.image ? Json(kelement(*v.image)) : Json();
    if (v.value) e["value"] = encode(*v.value);
    if (v.root) {
      e["polynomial"] = Json{{"text", v.root->to_string()}, {"s", encode(v.root->s)}, {"n", encode(v.root->n)}};
      e["root_selector"] = "either root (Galois conjugates)";
    }
    e["order"] = v.order ? Json(*v.order) : Json();
    th.push_back(e);
  }
  j["theta"] = th;
  Json ch = Json::array();
  for (const auto& m : a.checked)
    ch.push_back(Json{{"element", m.label}, {"image", kelement(m.image)}, {"trace", encode(m.trace)},
                      {"predicted", encode(m.predicted)}});
  j["minimal_elements"] = ch;
  j["unresolved"] = a.unresolved;
  j["uniformizer"] = a.unresolved.empty() ? "pinned by the values above" : "determined up to unramified twist";
  j["caveat"] = a.caveat;
  return j;
}

struct Flags {
  bool limit_hit = false;
  bool consistent = true;
};

template <class F>
auto limited(Flags& flags, int64_t limit, F&& body) -> Json {
  try {
    return body();
  } catch (const SizeLimitError& e) {
    flags.limit_hit = true;
    return Json{{"limit_exceeded", true}, {"limit", limit}, {"message", e.what()}};
  }
}

Json orbit_report(Newform f, size_t index, const JobSpec& job, Flags& flags) {
  const auto start = std::chrono::steady_clock::now();
  Json j;
  j["orbit"] = index;
  j["label"] = f.label();
  j["level"] = f.level;
  j["weight"] = f.weight;
  j["character"] = f.character.to_string();
  j["hecke_field"] = f.hecke_field ? f.hecke_field->modulus().to_string("x") : "x";
  Json ev;
  for (int64_t ell = 2; ell < 12; ++ell)
    if (is_prime(ell)) ev["a" + std::to_string(ell)] = encode(eigenvalue(f, ell));
  j["eigenvalues"] = ev;

  LocalComponent lc = classify(f);
  Json cls;
  cls["kind"] = lc.kind_name();
  if (lc.chi1) cls["chi1"] = encode(*lc.chi1);
  if (lc.chi2) cls["chi2"] = encode(*lc.chi2);
  j["classification"] = cls;

  if (lc.kind == LocalComponent::Kind::Supercuspidal) {
    Json chain = Json::array();
    Newform cur = f;
    while (auto tw = primitivity_test(build_type_space(cur))) {
      cur = tw->target;
      chain.push_back(Json{{"twist", tw->chi.to_string()},
                           {"level", cur.level},
                           {"character", cur.character.to_string()},
                           {"label", cur.label()}});
    }
    j["twist_chain"] = chain;
    const CuspidalType t = build_cuspidal_type(cur);
    j["type"] = encode_type(t, job, flags.consistent);
    if (job.char_table)
      j["character_table"] = limited(flags, job.class_limit, [&] {
        Json rows = Json::array();
        int64_t total = 0;
        for (const auto& c : character_table(t, job.class_limit)) {
          rows.push_back(Json{{"rep", kelement(c.rep)}, {"size", c.size}, {"trace", encode(c.trace)}});
          total += c.size;
        }
        return Json{{"classes", rows.size()}, {"elements", total}, {"table", rows}};
      });
    if (t.p == 2 || job.admissible_pair)
      j["exceptional"] = limited(flags, job.class_limit, [&] { return Json(detect_exceptional(t, job.class_limit)); });
    if (job.admissible_pair) {
      if (t.p == 2)
        j["admissible_pair"] = Json{{"skipped", "p = 2: admissible pairs parametrize only part of the supercuspidals"}};
      else
        j["admissible_pair"] =
            limited(flags, job.class_limit, [&] { return encode_pair(identify_pair(t, std::nullopt, job.class_limit)); });
    }
  }
  if (job.timing)
    j["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return j;
}

}  // namespace

Json run_job(const JobSpec& job) {
  validate(job);
  std::vector<Newform> forms;
  for (const auto& eps : characters_for(job))
    for (auto& f : find_newforms(eps, job.p, job.weight, job.constraints)) forms.push_back(std::move(f));
  if (job.orbit && *job.orbit >= forms.size())
    throw NotFoundError("orbit " + std::to_string(*job.orbit) + " requested, " + std::to_string(forms.size()) +
                        " match");
  if (forms.empty()) throw NotFoundError("no newform orbit matches the selector");

  Json input;
  input["level"] = job.level;
  input["p"] = job.p;
  input["weight"] = job.weight;
  input["character"] = job.character;
  input["orbit"] = job.orbit ? Json(*job.orbit) : Json("all");
  input["constraints"] = job.constraints;
  input["char_table"] = job.char_table;
  input["admissible_pair"] = job.admissible_pair;
  input["class_limit"] = job.class_limit;

  Flags flags;
  Json reports = Json::array();
  for (size_t i = 0; i < forms.size(); ++i)
    if (!job.orbit || *job.orbit == i) reports.push_back(orbit_report(forms[i], i, job, flags));

  Json out;
  out["format"] = "lcomp-report";
  out["version"] = kVersion;
  out["input"] = input;
  out["status"] = !flags.consistent ? "consistency-failure" : flags.limit_hit ? "size-limit" : "ok";
  out["orbits_matched"] = forms.size();
  out["reports"] = reports;
  return out;
}

}  // namespace lcomp
