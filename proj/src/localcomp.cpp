#include "lcomp/localcomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <random>
#include <sstream>

namespace lcomp {

namespace {

NfMatrix mat_pow(const NfMatrix& m, int64_t e) {
  NfMatrix out = NfMatrix::identity(m.rows()), b = m;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = out * b;
    b = b * b;
  }
  return out;
}

NfElem trace_of(const NfMatrix& m) {
  NfElem s(0);
  for (size_t i = 0; i < m.rows(); ++i) s = s + m(i, i);
  return s;
}

bool is_scalar(const NfMatrix& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (i != j ? !is_zero(m(i, j)) : !(m(i, j) == m(0, 0))) return false;
  return true;
}

int64_t root_order(const NfElem& z, int64_t bound) {
  NfElem w = z;
  for (int64_t k = 1; k <= bound; ++k, w = w * z)
    if (w == NfElem(1)) return k;
  throw ConsistencyError("root_order: not a root of unity of the expected order");
}

// eps_N(x): the character at x mod N, 1 mod p^r.
NfElem eps_N_value(const Newform& f, int64_t x) {
  const int64_t N = f.N(), pr = ipow(f.p, f.r);
  if (N == 1) return NfElem(1);
  return f.character_value(p_part_lift(x, pr, N));
}

}  // namespace

std::string SmoothCharacterQp::to_string() const {
  std::ostringstream os;
  os << "unit part " << unit_part.to_string() << ", chi(" << p
     << ") = " << value_at_p.to_string();
  if (p_exponent != 0) os << " * " << p << "^(" << p_exponent.get_str() << ")";
  return os.str();
}

std::string KElement::to_string() const {
  std::ostringstream os;
  os << "(" << j << "; " << a << ", " << b << ", " << c << ", " << d << ")";
  return os.str();
}

std::string LocalComponent::kind_name() const {
  switch (kind) {
    case Kind::PrincipalSeries: return "principal series";
    case Kind::Special: return "special";
    case Kind::Supercuspidal: return "supercuspidal";
  }
  return "";
}

KElement CuspidalType::normalize(KElement x) const {
  x.j = mod(x.j, period);
  x.a = mod(x.a, modulus);
  x.b = mod(x.b, modulus);
  x.c = mod(x.c, modulus);
  x.d = mod(x.d, modulus);
  return x;
}

namespace {

// Pi^-1 h Pi for h = [[a, b], [p c, d]].
KElement pi_conjugate(KElement h) { return KElement{h.j, h.d, -h.c, -h.b, h.a}; }

}  // namespace

KElement CuspidalType::mul(const KElement& x, const KElement& y) const {
  const int64_t m = modulus;
  KElement h = x;
  if (k_class == KClass::Ramified && mod(y.j, 2) == 1) h = pi_conjugate(h);
  KElement out;
  out.j = x.j + y.j;
  if (k_class == KClass::Unramified) {
    out.a = mod(h.a * y.a + h.b * y.c, m);
    out.b = mod(h.a * y.b + h.b * y.d, m);
    out.c = mod(h.c * y.a + h.d * y.c, m);
    out.d = mod(h.c * y.b + h.d * y.d, m);
  } else {
    out.a = mod(h.a * y.a + p * h.b * y.c, m);
    out.b = mod(h.a * y.b + h.b * y.d, m);
    out.c = mod(h.c * y.a + h.d * y.c, m);
    out.d = mod(p * h.c * y.b + h.d * y.d, m);
  }
  return normalize(out);
}

std::pair<int64_t, int64_t> CuspidalType::det(const KElement& x) const {
  if (k_class == KClass::Unramified) return {2 * x.j, mod(x.a * x.d - x.b * x.c, modulus)};
  return {x.j, mod(x.a * x.d - p * x.b * x.c, modulus)};
}

bool CuspidalType::contains(const KElement& x) const { return gcd64(det(x).second, p) == 1 || modulus == 1; }

KElement CuspidalType::inv(const KElement& x) const {
  const int64_t di = inverse_mod(det(x).second, modulus);
  KElement h{0, x.d * di, -x.b * di, -x.c * di, x.a * di};
  if (k_class == KClass::Ramified && mod(x.j, 2) == 1) h = pi_conjugate(h);
  h.j = -x.j;
  return normalize(h);
}

std::vector<KElement> CuspidalType::group_generators() const {
  std::vector<KElement> g;
  if (k_class == KClass::Unramified) {
    g.push_back(normalize({0, 1, 1, 0, 1}));
    g.push_back(normalize({0, 0, -1, 1, 0}));
  } else {
    g.push_back(normalize({0, 1, 1, 0, 1}));
    g.push_back(normalize({0, 1, 0, 1, 1}));
    for (int64_t a : det_group.gens) g.push_back(normalize({0, 1, 0, 0, a}));
  }
  for (int64_t a : det_group.gens) g.push_back(normalize({0, a, 0, 0, 1}));
  if (period > 1 || k_class == KClass::Ramified) g.push_back(normalize({1, 1, 0, 0, 1}));
  return g;
}

int64_t CuspidalType::group_order() const {
  const int64_t q = modulus, ph = euler_phi(q);
  if (k_class == KClass::Unramified) return period * (q * q * q * q / (p * p * p * p)) * (p * p - 1) * (p * p - p);
  return period * ph * ph * q * q;
}

std::vector<KElement> CuspidalType::elements(int64_t limit) const {
  if (group_order() > limit) throw SizeLimitError("K / K_n has " + std::to_string(group_order()) + " elements");
  std::vector<KElement> out;
  out.reserve(static_cast<size_t>(group_order()));
  const int64_t q = modulus;
  for (int64_t j = 0; j < period; ++j)
    for (int64_t a = 0; a < q; ++a)
      for (int64_t b = 0; b < q; ++b)
        for (int64_t c = 0; c < q; ++c)
          for (int64_t d = 0; d < q; ++d) {
            KElement x{j, a, b, c, d};
            if (contains(x) && (k_class == KClass::Unramified || (gcd64(a, p) == 1 && gcd64(d, p) == 1)))
              out.push_back(x);
          }
  if (static_cast<int64_t>(out.size()) != group_order()) throw ConsistencyError("elements: count mismatch");
  return out;
}

Mat2 lift_to_integer_matrix(int64_t a, int64_t b, int64_t c, int64_t d, int64_t pM, int64_t N) {
  if (mod(a * d - b * c, pM) != 1) throw UsageError("lift_to_integer_matrix: determinant is not 1");
  const int64_t m = pM * N;
  // x mod p^M and y mod N; p_part_lift(x) is x mod p^M and 1 mod N.
  const int64_t e0 = N == 1 ? 0 : p_part_lift(0, N, pM);
  auto crt = [&](int64_t x, int64_t y) { return N == 1 ? mod(x, pM) : mod(p_part_lift(x, N, pM) + (y - 1) * e0, m); };
  a = crt(a, 1);
  b = crt(b, 0);
  c = crt(c, 0);
  d = crt(d, 1);
  if (c == 0) c = m;
  while (gcd64(c, d) != 1) d += m;
  int64_t u, v;
  xgcd64(d, c, u, v);  // u d + v c = 1
  const int64_t x = u, y = -v;
  const int64_t e = mod(a - x, m), f = mod(b - y, m);
  const int64_t t = mod(e * mod(v, m) + f * mod(u, m), m);  // v c + u d = 1
  const int64_t A = x + t * c, B = y + t * d;
  if (A * d - B * c != 1) throw ConsistencyError("lift_to_integer_matrix: lift failed");
  return Mat2::of(A, B, c, d);
}

NfMatrix rho_on_sk(const CuspidalType& t, const KElement& s0) {
  const KElement s = t.normalize(s0);
  if (s.j != 0 || t.det(s).second != mod(1, t.modulus)) throw UsageError("rho_on_sk: element is not in S(K)");
  auto it = t.sk_cache->find(s);
  if (it != t.sk_cache->end()) return it->second;
  const Newform& f = t.ts.f;
  const int64_t p = t.p, n0 = t.r / 2, pM = ipow(p, (t.r + 1) / 2);
  int64_t A = s.a, B = s.b, C = s.c, D = s.d;
  if (t.k_class == KClass::Ramified) {
    // [[a, b], [p c, d]] with det exactly 1 mod p^M
    C = p * s.c;
    D = mod((1 + B * C) * inverse_mod(A, pM), pM);
  }
  const Mat2 al = lift_to_integer_matrix(A, B, C, D, pM, f.N());
  const Rational q(ipow(p, n0));
  const Mat2 g{al.a, al.b / q, al.c * q, al.d};
  NfMatrix out = t.ts.restrict(f.space->normalizer_action(g));
  t.sk_cache->emplace(s, out);
  return out;
}

namespace {

NfMatrix lambda_of(const CuspidalType& t, int64_t delta) {
  NfMatrix out = NfMatrix::identity(t.dim());
  if (t.det_group.gens.empty()) return out;
  const auto k = t.det_group.log(delta);
  for (size_t i = 0; i < k.size(); ++i) out = out * mat_pow(t.lambda[i], k[i]);
  return out;
}

// The unique combination X of the intertwiners with X sigma = sigma (sigma = e_0).
NfMatrix unique_fixing_sigma(const std::vector<NfMatrix>& sols, size_t d) {
  const size_t k = sols.size();
  NfMatrix M(d, k + 1);
  for (size_t i = 0; i < k; ++i)
    for (size_t r = 0; r < d; ++r) M(r, i) = sols[i](r, 0);
  M(0, k) = NfElem(-1);
  Subspace<NfElem> ker = kernel(M);
  if (ker.dim() != 1 || is_zero(ker.basis(0, k)))
    throw ConsistencyError("build_cuspidal_type: no unique intertwiner for diag(a, 1) fixing sigma (" +
                           std::to_string(k) + " intertwiners)");
  const NfElem s = ker.basis(0, k).inverse();
  NfMatrix X(d, d);
  for (size_t i = 0; i < k; ++i) X = X + (s * ker.basis(0, i)) * sols[i];
  return X;
}

}  // namespace

NfMatrix rho_at(const CuspidalType& t, const KElement& g0) {
  const KElement g = t.normalize(g0);
  const int64_t delta = t.det(g).second, di = inverse_mod(delta, t.modulus);
  const KElement s = t.normalize({0, g.a * di, g.b * di, g.c, g.d});
  return mat_pow(t.rho_central, g.j) * lambda_of(t, delta) * rho_on_sk(t, s);
}

namespace {
CuspidalType build_type(const Newform& f0);
}

CuspidalType build_cuspidal_type(const Newform& f0) {
  try {
    return build_type(f0);
  } catch (const DomainError&) {
    throw UsageError("build_cuspidal_type: f is not p-primitive (type space not stable under S(K))");
  }
}

namespace {

CuspidalType build_type(const Newform& f0) {
  Newform f = f0;
  if (!is_zero(eigenvalue(f, f.p))) throw UsageError("build_cuspidal_type: a_p is nonzero");
  CuspidalType t;
  t.p = f.p;
  t.r = f.r;
  t.ts = build_type_space(f);
  if (t.ts.c > f.r / 2) throw UsageError("build_cuspidal_type: f is not p-primitive");
  const int64_t p = f.p, ef = f.character.order();
  const size_t d = t.ts.dim();
  if (f.r % 2 == 0) {
    t.k_class = KClass::Unramified;
    t.n = f.r / 2;
    t.modulus = ipow(p, t.n);
    const NfElem z = eps_N_value(f, p).inverse();
    t.rho_central = z * NfMatrix::identity(d);
    t.period = root_order(z, ef);
  } else {
    t.k_class = KClass::Ramified;
    t.n = f.r - 1;
    t.modulus = ipow(p, t.n / 2);
    t.rho_central = eps_N_value(f, ipow(p, f.r / 2)) * t.ts.restrict(f.space->atkin_lehner(ipow(p, f.r)));
    const NfMatrix sq = t.rho_central * t.rho_central;
    if (!is_scalar(sq)) throw ConsistencyError("build_cuspidal_type: rho(Pi)^2 is not scalar");
    t.period = 2 * root_order(sq(0, 0), 2 * ef);
  }
  t.det_group = UnitGroup::of(t.modulus);
  t.lambda_gens = t.det_group.gens;

  std::vector<KElement> gens{t.normalize({0, 1, 1, 0, 1})};
  if (t.k_class == KClass::Unramified) {
    gens.push_back(t.normalize({0, 0, -1, 1, 0}));
  } else {
    gens.push_back(t.normalize({0, 1, 0, 1, 1}));
    for (int64_t a : t.det_group.gens) gens.push_back(t.normalize({0, a, 0, 0, inverse_mod(a, t.modulus)}));
  }
  for (const auto& g : gens) t.sk_gens.emplace_back(g, rho_on_sk(t, g));

  for (size_t i = 0; i < t.lambda_gens.size(); ++i) {
    const int64_t a = t.lambda_gens[i], ai = inverse_mod(a, t.modulus);
    std::vector<std::pair<NfMatrix, NfMatrix>> pairs;
    for (const auto& [g, m] : t.sk_gens) pairs.emplace_back(m, rho_on_sk(t, {0, g.a, g.b * a, g.c * ai, g.d}));
    if (t.k_class == KClass::Ramified)
      pairs.emplace_back(t.rho_central, t.rho_central * rho_on_sk(t, {0, ai, 0, 0, a}));
    NfMatrix X = unique_fixing_sigma(solve_intertwiners(pairs), d);
    if (!(mat_pow(X, t.det_group.orders[i]) == NfMatrix::identity(d)))
      throw ConsistencyError("build_cuspidal_type: diag(a, 1) has the wrong order");
    t.lambda.push_back(X);
  }

  const SplitCharacter sc = split_at_p(f.character, p);
  t.central.p = p;
  t.central.unit_part = sc.eps_p;
  t.central.zeta = f.zeta;
  t.central.zeta_order = ef;
  t.central.value_at_p = eps_N_value(f, p).inverse();
  return t;
}

}  // namespace

LocalComponent classify(Newform& f) {
  if (f.r < 1) throw UsageError("classify: p must divide the level");
  const int64_t p = f.p;
  const int k = f.weight;
  const NfElem ap = eigenvalue(f, p);
  LocalComponent lc;
  if (is_zero(ap)) {
    lc.kind = LocalComponent::Kind::Supercuspidal;
    return lc;
  }
  const SplitCharacter sc = split_at_p(f.character, p);
  const int c = valuation(sc.eps_p.conductor(), p);
  const NfElem epsNp = eps_N_value(f, p);
  auto make = [&](DirichletCharacter unit, NfElem value, Rational e) {
    SmoothCharacterQp x;
    x.p = p;
    x.unit_part = std::move(unit);
    x.zeta = f.zeta;
    x.zeta_order = f.character.order();
    x.value_at_p = std::move(value);
    x.p_exponent = e;
    return x;
  };
  if (c == f.r) {
    lc.kind = LocalComponent::Kind::PrincipalSeries;
    lc.chi1 = make(DirichletCharacter(1), ap, make_rational(1 - k, 2));
    lc.chi2 = make(sc.eps_p.inverse(), epsNp / ap, make_rational(k - 1, 2));
    return lc;
  }
  if (f.r == 1 && c == 0) {
    if (!(ap * ap == NfElem(Rational(ipow(p, k - 2))) * epsNp))
      throw ConsistencyError("classify: a_p^2 != p^(k-2) eps_N(p) at a special prime");
    lc.kind = LocalComponent::Kind::Special;
    lc.chi1 = make(DirichletCharacter(1), ap, make_rational(2 - k, 2));
    return lc;
  }
  throw ConsistencyError("classify: a_p != 0 but eps_p has the wrong conductor");
}

LocalComponent local_component(Newform& f) {
  LocalComponent lc = classify(f);
  if (lc.kind != LocalComponent::Kind::Supercuspidal) return lc;
  auto chain = minimal_twist_chain(f);
  lc.twist_chars = chain.chars;
  lc.type = build_cuspidal_type(chain.minimal);
  return lc;
}

namespace {

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), size_t{0}); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

size_t index_of(const std::vector<KElement>& els, const KElement& x) {
  auto it = std::lower_bound(els.begin(), els.end(), x);
  if (it == els.end() || !(*it == x)) throw ConsistencyError("index_of: element not enumerated: " + x.to_string());
  return static_cast<size_t>(it - els.begin());
}

}  // namespace

std::vector<ClassEntry> character_table(const CuspidalType& t, int64_t limit) {
  const auto els = t.elements(limit);
  const auto gens = t.group_generators();
  std::vector<KElement> ginv;
  for (const auto& g : gens) ginv.push_back(t.inv(g));
  UnionFind uf(els.size());
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) uf.unite(i, index_of(els, t.mul(t.mul(gens[k], els[i]), ginv[k])));
  std::map<size_t, int64_t> sizes;
  for (size_t i = 0; i < els.size(); ++i) ++sizes[uf.find(i)];
  std::vector<ClassEntry> out;
  for (const auto& [root, size] : sizes) out.push_back({els[root], size, trace_of(rho_at(t, els[root]))});
  return out;
}

size_t class_of(const CuspidalType& t, const std::vector<ClassEntry>& table, const KElement& g) {
  const auto gens = t.group_generators();
  std::set<KElement> seen{t.normalize(g)};
  std::vector<KElement> todo{t.normalize(g)};
  while (!todo.empty()) {
    KElement x = todo.back();
    todo.pop_back();
    for (const auto& h : gens) {
      KElement y = t.mul(t.mul(h, x), t.inv(h));
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  for (size_t i = 0; i < table.size(); ++i)
    if (seen.count(table[i].rep)) return i;
  throw UsageError("class_of: element not in the table");
}

HomomorphismReport verify_homomorphism(const CuspidalType& t, size_t samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int64_t n) { return static_cast<int64_t>(rng() % static_cast<uint64_t>(n)); };
  auto random_element = [&] {
    for (;;) {
      KElement x{uniform(t.period), uniform(t.modulus), uniform(t.modulus), uniform(t.modulus), uniform(t.modulus)};
      bool ok = t.contains(x);
      if (t.k_class == KClass::Ramified) ok = gcd64(x.a, t.p) == 1 && gcd64(x.d, t.p) == 1;
      if (ok) return x;
    }
  };
  HomomorphismReport rep;
  for (size_t i = 0; i < samples; ++i) {
    const KElement x = random_element(), y = random_element();
    if (!(rho_at(t, t.mul(x, y)) == rho_at(t, x) * rho_at(t, y)))
      throw ConsistencyError("verify_homomorphism: rho(xy) != rho(x) rho(y) at x = " + x.to_string() +
                             ", y = " + y.to_string());
    ++rep.pairs;
    if (!(trace_of(rho_at(t, t.mul(t.mul(y, x), t.inv(y)))) == trace_of(rho_at(t, x))))
      throw ConsistencyError("verify_homomorphism: trace not conjugation invariant at " + x.to_string());
    ++rep.conjugates;
  }
  return rep;
}

size_t commutant_dimension(const CuspidalType& t) {
  std::vector<std::pair<NfMatrix, NfMatrix>> pairs;
  for (const auto& [g, m] : t.sk_gens) pairs.emplace_back(m, m);
  for (const auto& m : t.lambda) pairs.emplace_back(m, m);
  pairs.emplace_back(t.rho_central, t.rho_central);
  return solve_intertwiners(pairs).size();
}

}  // namespace lcomp
