#include "lcomp/report.hpp"

#include <chrono>
#include <set>
#include <sstream>

namespace lcomp {

namespace {

std::string field_poly(const FieldPtr& F) { return F ? F->modulus().to_string("x") : "x"; }

Json coords_of(const NfElem& x, size_t degree) {
  Json c = Json::array();
  auto v = x.coords();
  v.resize(std::max<size_t>(degree, 1), Rational(0));
  for (const auto& q : v) c.push_back(q.get_str());
  return c;
}

FieldPtr field_from(const Json& j, const FieldPtr& hint) {
  const std::string poly = j.at("field").get<std::string>();
  if (poly == "x") return nullptr;
  if (hint && field_poly(hint) == poly) return hint;
  return NumberField::make(parse_qpoly(poly), j.value("var", std::string("a")));
}

NfElem from_coords(const Json& c, const FieldPtr& F) {
  std::vector<Rational> v;
  for (const auto& q : c) v.push_back(Rational(q.get<std::string>()));
  for (auto& q : v) q.canonicalize();
  if (!F) {
    if (v.size() != 1) throw UsageError("decode: rational element with " + std::to_string(v.size()) + " coordinates");
    return NfElem(v[0]);
  }
  return NfElem(F, v);
}

}  // namespace

Json encode(const NfElem& x) {
  Json j;
  j["text"] = x.to_string();
  j["field"] = field_poly(x.field());
  if (x.field()) j["var"] = x.field()->var();
  j["coords"] = coords_of(x, x.field() ? static_cast<size_t>(x.field()->degree()) : 1);
  return j;
}

Json encode(const NfMatrix& m) {
  FieldPtr F;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t k = 0; k < m.cols(); ++k)
      if (!F && m(i, k).field()) F = m(i, k).field();
  Json j;
  j["field"] = field_poly(F);
  if (F) j["var"] = F->var();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json e = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(coords_of(m(i, k), F ? F->degree() : 1));
    e.push_back(row);
  }
  j["entries"] = e;
  return j;
}

Json encode(const SmoothCharacterQp& chi) {
  Json j;
  j["text"] = chi.to_string();
  j["unit_part"] = chi.unit_part.to_string();
  j["unit_modulus"] = chi.unit_part.modulus();
  j["conductor_exponent"] = chi.conductor_exponent();
  j["value_at_p"] = encode(chi.value_at_p);
  j["p_exponent"] = chi.p_exponent.get_str();
  return j;
}

NfElem decode_element(const Json& j, const FieldPtr& field) {
  return from_coords(j.at("coords"), field_from(j, field));
}

NfMatrix decode_matrix(const Json& j, const FieldPtr& field) {
  const FieldPtr F = field_from(j, field);
  NfMatrix m(j.at("rows").get<size_t>(), j.at("cols").get<size_t>());
  const Json& e = j.at("entries");
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t k = 0; k < m.cols(); ++k) m(i, k) = from_coords(e.at(i).at(k), F);
  return m;
}

namespace {

bool is_element(const Json& j) { return j.is_object() && j.contains("coords") && j.contains("text"); }
bool is_matrix(const Json& j) { return j.is_object() && j.contains("entries"); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& x : a)
    if (x.is_structured() && !is_element(x)) return false;
  return true;
}

void render(const Json& j, const std::string& key, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  const std::string head = key.empty() ? "" : key + ":";
  if (is_element(j)) {
    os << pad << head << " " << j["text"].get<std::string>() << "\n";
  } else if (is_matrix(j)) {
    os << pad << head << "\n";
    const NfMatrix m = decode_matrix(j);
    for (size_t i = 0; i < m.rows(); ++i) {
      os << pad << "  [";
      for (size_t k = 0; k < m.cols(); ++k) os << (k ? ", " : "") << m(i, k).to_string();
      os << "]\n";
    }
  } else if (j.is_object()) {
    if (!head.empty()) os << pad << head << "\n";
    const int inner = key.empty() ? indent : indent + 2;
    for (const auto& [k, v] : j.items()) render(v, k, inner, os);
  } else if (j.is_array() && all_scalars(j)) {
    os << pad << head << " [";
    for (size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (is_element(j[i]) ? j[i]["text"].get<std::string>() : scalar_text(j[i]));
    os << "]\n";
  } else if (j.is_array()) {
    os << pad << head << "\n";
    for (size_t i = 0; i < j.size(); ++i) {
      os << pad << "  - " << key << "[" << i << "]\n";
      render(j[i], "", indent + 4, os);
    }
  } else {
    os << pad << head << " " << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, "", 0, os);
  return os.str();
}

}  // namespace lcomp
