#include "lcomp/select.hpp"

#include <cctype>

namespace lcomp {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw UsageError("expected a number");
  try {
    Rational r(s);
    r.canonicalize();
    if (r.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

int64_t parse_int(const std::string& s) {
  size_t pos = 0;
  int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

QPoly parse_qpoly(const std::string& input) {
  const std::string s = strip(input);
  if (s.empty()) throw UsageError("empty polynomial");
  std::vector<Rational> c;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = i + 1;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    Rational sign = 1;
    if (term[0] == '+' || term[0] == '-') {
      if (term[0] == '-') sign = -1;
      term = term.substr(1);
    }
    const size_t x = term.find('x');
    Rational coef = 1;
    int deg = 0;
    if (x == std::string::npos) {
      coef = parse_rational(term);
    } else {
      std::string cs = term.substr(0, x);
      if (!cs.empty() && cs.back() == '*') cs.pop_back();
      if (!cs.empty()) coef = parse_rational(cs);
      const std::string rest = term.substr(x + 1);
      deg = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') throw UsageError("bad polynomial term '" + term + "'");
        deg = static_cast<int>(parse_int(rest.substr(1)));
        if (deg < 0) throw UsageError("negative exponent in '" + term + "'");
      }
    }
    if (c.size() <= static_cast<size_t>(deg)) c.resize(deg + 1, Rational(0));
    c[deg] += sign * coef;
  }
  return QPoly(std::move(c));
}

DirichletCharacter parse_character(const std::string& input, int64_t level) {
  std::string s = strip(input);
  if (s.empty() || s == "trivial") return DirichletCharacter(level);
  int64_t m = level;
  const size_t colon = s.find(':');
  if (colon != std::string::npos) {
    m = parse_int(s.substr(0, colon));
    s = s.substr(colon + 1);
    if (m < 1 || level % m != 0) throw UsageError("character modulus must divide the level");
  }
  std::vector<std::pair<int64_t, RootOfUnity>> vals;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    const std::string item = s.substr(i, j - i);
    const size_t eq = item.find('='), sl = item.find('/');
    if (eq == std::string::npos || sl == std::string::npos || sl < eq)
      throw UsageError("character values look like u=k/n: '" + item + "'");
    const int64_t u = parse_int(item.substr(0, eq));
    const int64_t k = parse_int(item.substr(eq + 1, sl - eq - 1));
    const int64_t n = parse_int(item.substr(sl + 1));
    if (n < 1) throw UsageError("root of unity order must be positive");
    if (gcd64(u, m) != 1) throw UsageError(std::to_string(u) + " is not a unit mod " + std::to_string(m));
    vals.emplace_back(mod(u, m), RootOfUnity::make(n, k));
    i = j + 1;
  }
  try {
    return DirichletCharacter::from_values(m, vals).extend(level);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

EigenConstraint parse_constraint(const std::string& input) {
  const std::string s = strip(input);
  EigenConstraint c;
  c.text = s;
  const size_t op = s.find_first_of("=~");
  if (s.size() < 3 || s[0] != 'a' || op == std::string::npos)
    throw UsageError("constraints look like a2=-1 or a2~x^2+2x+2: '" + s + "'");
  c.ell = parse_int(s.substr(1, op - 1));
  if (c.ell < 1) throw UsageError("constraint index must be positive");
  if (s[op] == '=')
    c.value = parse_rational(s.substr(op + 1));
  else
    c.minpoly = parse_qpoly(s.substr(op + 1)).monic();
  return c;
}

bool satisfies(Newform& f, const EigenConstraint& c) {
  const NfElem a = eigenvalue(f, c.ell);
  if (c.value) return a == NfElem(*c.value);
  return a.minpoly() == *c.minpoly;
}

std::vector<Newform> select_orbits(std::vector<Newform> forms, const std::vector<EigenConstraint>& cs) {
  std::vector<Newform> out;
  for (auto& f : forms) {
    bool ok = true;
    for (const auto& c : cs) ok = ok && satisfies(f, c);
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Newform> find_newforms(const DirichletCharacter& eps, int64_t p, int k,
                                   const std::vector<std::string>& constraints) {
  std::vector<EigenConstraint> cs;
  for (const auto& s : constraints) cs.push_back(parse_constraint(s));
  return select_orbits(newforms(eps, p, k), cs);
}

}  // namespace lcomp
