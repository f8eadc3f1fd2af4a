#include "lcomp/admissible.hpp"

#include <sstream>

namespace lcomp {

namespace {

// a + b y in K[y] / (y^2 - s y + n).
struct QuadElem {
  NfElem a, b;
};

QuadElem qmul(const QuadraticRoot& q, const QuadElem& x, const QuadElem& y) {
  const NfElem bd = x.b * y.b;
  return {x.a * y.a - bd * q.n, x.a * y.b + x.b * y.a + bd * q.s};
}

QuadElem qpow(const QuadraticRoot& q, QuadElem x, int64_t e) {
  QuadElem out{NfElem(1), NfElem(0)};
  for (; e > 0; e >>= 1) {
    if (e & 1) out = qmul(q, out, x);
    x = qmul(q, x, x);
  }
  return out;
}

NfElem trace_of(const NfMatrix& m) {
  NfElem s(0);
  for (size_t i = 0; i < m.rows(); ++i) s = s + m(i, i);
  return s;
}

int legendre(int64_t x, int64_t p) {
  x = mod(x, p);
  if (x == 0) return 0;
  return power_mod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
}

const char* kNoPair = "no admissible pair: input may be exceptional (p = 2) or data corrupted";

// Elements of K / K_n with j = 0, their traces, and the traces after multiplying
// by the central generator (p I or Pi).
struct TraceData {
  std::vector<KElement> els;
  std::vector<NfElem> tr, tr_central;
};

TraceData trace_data(const CuspidalType& t, int64_t limit) {
  TraceData d;
  for (const auto& g : t.elements(limit)) {
    if (g.j != 0) continue;
    const NfMatrix m = rho_at(t, g);
    d.els.push_back(g);
    d.tr.push_back(trace_of(m));
    d.tr_central.push_back(trace_of(t.rho_central * m));
  }
  return d;
}

// Valuation of det of the central generator.
int central_valuation(const CuspidalType& t) { return t.k_class == KClass::Unramified ? 2 : 1; }

std::optional<NfElem> root_in(const FieldPtr& field, int64_t e) {
  if (e == 1) return NfElem(1);
  if (e == 2) return NfElem(-1);
  try {
    return primitive_root_of_unity(field, e);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::string QuadraticExtension::to_string() const {
  if (kind == Kind::Unramified) return "unramified quadratic extension of Q_" + std::to_string(p);
  return "Q_" + std::to_string(p) + "(sqrt(" + std::to_string(d) + "))";
}

std::string QuadraticRoot::to_string() const {
  return "root of x^2 - (" + s.to_string() + ") x + (" + n.to_string() + ")";
}

std::string TwistCharacter::to_string() const {
  std::ostringstream os;
  os << "unit part " << unit_part.to_string() << ", chi(p)";
  if (p_power != 1) os << "^" << p_power;
  os << " = " << value.to_string();
  return os.str();
}

std::optional<int64_t> root_of_unity_order(const NfElem& x, int64_t bound) {
  if (is_zero(x)) return std::nullopt;
  NfElem w = x;
  for (int64_t k = 1; k <= bound; ++k, w = w * x)
    if (w == NfElem(1)) return k;
  return std::nullopt;
}

std::optional<int64_t> root_of_unity_order(const QuadraticRoot& q, int64_t bound) {
  if (is_zero(q.n)) return std::nullopt;
  const QuadElem y{NfElem(0), NfElem(1)};
  QuadElem w = y;
  for (int64_t k = 1; k <= bound; ++k, w = qmul(q, w, y))
    if (is_zero(w.b) && w.a == NfElem(1)) return k;
  return std::nullopt;
}

NfElem twist_value(const CuspidalType& t, const TwistCharacter& chi, const KElement& g) {
  const auto [v, delta] = t.det(g);
  NfElem out = chi.unit_part.value(delta, chi.zeta, chi.zeta_order);
  if (v % chi.p_power != 0) throw UsageError("twist_value: chi(p) is only known to the power " +
                                             std::to_string(chi.p_power));
  return out * chi.value.pow(v / chi.p_power);
}

std::vector<TwistCharacter> quadratic_self_twists(const CuspidalType& t, int64_t limit) {
  const TraceData d = trace_data(t, limit);
  const int vc = central_valuation(t);
  std::vector<TwistCharacter> out;
  for (const auto& unit : enumerate_characters(t.modulus)) {
    if (unit.order() > 2) continue;
    for (int s : {1, -1}) {
      if (unit.is_trivial() && s == 1) continue;
      TwistCharacter chi{unit, NfElem(unit.order() == 2 ? -1 : 1), unit.order(), 1, NfElem(s)};
      bool ok = true;
      for (size_t i = 0; i < d.els.size() && ok; ++i) {
        const NfElem u = unit.value(t.det(d.els[i]).second, chi.zeta, chi.zeta_order);
        if (u == NfElem(-1) && !is_zero(d.tr[i])) ok = false;
        if (u * NfElem(s).pow(vc) == NfElem(-1) && !is_zero(d.tr_central[i])) ok = false;
      }
      if (ok) out.push_back(chi);
    }
  }
  return out;
}

bool detect_exceptional(const CuspidalType& t, int64_t limit) { return quadratic_self_twists(t, limit).empty(); }

std::optional<TwistCharacter> twist_relation(const CuspidalType& t1, const CuspidalType& t2, int64_t limit) {
  if (t1.p != t2.p || t1.k_class != t2.k_class || t1.n != t2.n)
    throw UsageError("twist_relation: types must share p, the class of K and the level");
  if (t1.dim() != t2.dim()) return std::nullopt;
  const FieldPtr F1 = t1.field(), F2 = t2.field();
  if ((F1 || F2) && !(F1 && F2 && F1->modulus() == F2->modulus()))
    throw UsageError("twist_relation: types must be defined over the same field");
  const TraceData d1 = trace_data(t1, limit), d2 = trace_data(t2, limit);
  const bool ramified = t1.k_class == KClass::Ramified;
  for (const auto& unit : enumerate_characters(t1.modulus)) {
    auto z = root_in(F1, unit.order());
    if (!z) continue;
    TwistCharacter chi{unit, *z, unit.order(), ramified ? 1 : 2, NfElem(1)};
    auto u = [&](size_t i) { return unit.value(t1.det(d1.els[i]).second, chi.zeta, chi.zeta_order); };
    bool ok = true;
    for (size_t i = 0; i < d1.els.size() && ok; ++i) ok = d1.tr[i] == u(i) * d2.tr[i];
    if (!ok) continue;
    std::optional<NfElem> c;
    for (size_t i = 0; i < d1.els.size() && !c; ++i)
      if (!is_zero(d2.tr_central[i])) c = d1.tr_central[i] / (u(i) * d2.tr_central[i]);
    if (!c) {
      // All central traces vanish: only chi(p)^2 is visible, through Pi^2.
      chi.p_power = 2;
      c = (t1.rho_central * t1.rho_central)(0, 0) / (t2.rho_central * t2.rho_central)(0, 0);
    }
    chi.value = *c;
    for (size_t i = 0; i < d1.els.size() && ok; ++i) ok = d1.tr_central[i] == u(i) * chi.value * d2.tr_central[i];
    if (ok && ramified && chi.p_power == 1)
      ok = (t1.rho_central * t1.rho_central)(0, 0) == chi.value * chi.value * (t2.rho_central * t2.rho_central)(0, 0);
    if (ok) return chi;
  }
  return std::nullopt;
}

namespace {

const char* kCaveat =
    "theta is the Bushnell-Henniart parametrization; the Langlands parameter is induced from theta Delta_theta, "
    "Delta_theta of order dividing 4";

bool is_scalar_element(const KElement& g) { return g.b == 0 && g.c == 0 && g.a == g.d; }

// Order of g in (GL_2(Z/p^n)) modulo scalars.
int64_t order_mod_scalars(const CuspidalType& t, const KElement& g, int64_t bound) {
  KElement x = g;
  for (int64_t k = 1; k <= bound; ++k, x = t.mul(x, g))
    if (is_scalar_element(x)) return k;
  return 0;
}

void check(MinimalElement e, AdmissiblePair& out) {
  if (!(e.trace == e.predicted))
    throw ConsistencyError(std::string(kNoPair) + " (trace " + e.trace.to_string() + " at " + e.label +
                           ", predicted " + e.predicted.to_string() + ")");
  out.checked.push_back(std::move(e));
}

AdmissiblePair unramified_pair(const CuspidalType& t, std::optional<std::pair<int64_t, int64_t>> alpha) {
  const int64_t p = t.p, q = t.modulus, target = (p + 1) * (q / p);
  AdmissiblePair out;
  out.E = {QuadraticExtension::Kind::Unramified, p, 0};
  out.iota = t.n % 2 == 0 ? 1 : -1;
  auto minimal = [&](int64_t tt, int64_t dd) { return legendre(tt * tt - 4 * dd, p) == -1; };
  KElement g;
  if (alpha) {
    if (!minimal(alpha->first, alpha->second)) throw UsageError("identify_pair: x^2 - t x + d must be irreducible mod p");
    g = t.normalize({0, alpha->first, -1, alpha->second, 0});
  } else {
    bool found = false;
    for (int64_t tt = 0; tt < q && !found; ++tt)
      for (int64_t dd = 0; dd < q && !found; ++dd) {
        if (!minimal(tt, dd)) continue;
        g = t.normalize({0, tt, -1, dd, 0});
        found = order_mod_scalars(t, g, target) == target;
      }
    if (!found) throw ConsistencyError("identify_pair: no generator of the torus modulo scalars");
  }
  const int64_t ord = order_mod_scalars(t, g, target);
  const NfElem iota(out.iota);
  const QuadraticRoot root{iota * trace_of(rho_at(t, g)), t.central.on_units(t.det(g).second)};
  if (is_zero(root.s * root.s - NfElem(4) * root.n))
    throw ConsistencyError(std::string(kNoPair) + " (theta factors through the norm)");
  std::ostringstream lab;
  lab << "alpha, x^2 - " << g.a << " x + " << g.c;
  out.theta.push_back({lab.str(), g, std::nullopt, root, root_of_unity_order(root)});
  out.theta.push_back({"p", std::nullopt, t.central.value_at_p, std::nullopt, root_of_unity_order(t.central.value_at_p)});

  // Power sums of the two roots give theta(alpha^k) + theta(alpha^k s).
  NfElem s_prev(2), s_cur = root.s;
  KElement x = g;
  for (int64_t k = 1; k <= ord; ++k) {
    if (k % (p + 1) != 0) check({"alpha^" + std::to_string(k), x, trace_of(rho_at(t, x)), iota * s_cur}, out);
    const NfElem s_next = root.s * s_cur - root.n * s_prev;
    s_prev = s_cur;
    s_cur = s_next;
    x = t.mul(x, g);
  }
  check({"p alpha", t.normalize({1, g.a, g.b, g.c, g.d}), trace_of(t.rho_central * rho_at(t, g)),
         iota * t.central.value_at_p * root.s},
        out);
  return out;
}

AdmissiblePair ramified_pair(const CuspidalType& t, int64_t limit) {
  const int64_t p = t.p;
  std::optional<TwistCharacter> chi;
  for (const auto& c : quadratic_self_twists(t, limit))
    if (!c.unit_part.is_trivial()) {
      chi = c;
      break;
    }
  if (!chi) throw ConsistencyError(std::string(kNoPair) + " (no ramified self-twist)");
  const int s = chi->value == NfElem(1) ? 1 : -1;
  int64_t u = 1;
  if (s != legendre(-1, p)) {
    if (p % 4 == 3) {
      u = -1;
    } else {
      u = 2;
      while (legendre(u, p) != -1) ++u;
    }
  }
  AdmissiblePair out;
  out.E = {QuadraticExtension::Kind::Ramified, p, p * u};
  out.iota = 1;
  const std::string sd = "sqrt(" + std::to_string(p * u) + ")";
  // x sqrt(D) + y D = Pi [[-x, -y u], [p y u, x u]]
  auto image = [&](int64_t x, int64_t y) { return t.normalize({1, -x, -y * u, y * u, x * u}); };
  auto eps = [&](int64_t x) { return t.central.on_units(mod(x, t.modulus)); };
  const NfElem th_p = t.central.value_at_p, th_m1 = eps(-1), th_D = th_p * eps(u);

  if (!(th_m1 == NfElem(1))) {
    out.theta.push_back({sd, image(1, 0), std::nullopt, QuadraticRoot{NfElem(0), NfElem(-1) * th_D}, std::nullopt});
    out.unresolved.push_back("sign of theta(" + sd + ")");
    out.unresolved.push_back("theta on U_E^1");
    for (int64_t x = 1; x < p; ++x)
      check({"x = " + std::to_string(x) + ", y = 0", image(x, 0), trace_of(rho_at(t, image(x, 0))), NfElem(0)}, out);
    return out;
  }
  const NfElem tv = trace_of(rho_at(t, image(1, 0))) / NfElem(2);
  if (!(tv * tv == th_D)) throw ConsistencyError(std::string(kNoPair) + " (theta(sqrt D)^2 != theta(D))");
  out.theta.push_back({sd, image(1, 0), tv, std::nullopt, root_of_unity_order(tv)});
  if (t.n != 2) {
    out.unresolved.push_back("theta on U_E^1 / U_E^" + std::to_string(t.n + 1));
    for (int64_t x = 1; x < p; ++x)
      check({"x = " + std::to_string(x) + ", y = 0", image(x, 0), trace_of(rho_at(t, image(x, 0))),
             NfElem(2) * tv * eps(x)},
            out);
    return out;
  }
  // Level 2: theta(x + y sqrt D) = eps_p(x) zeta^(y/x) with zeta = theta(1 + sqrt D).
  const int64_t D = p * u;
  const NfElem T1 = trace_of(rho_at(t, image(1, 1))), N1 = th_p * eps(u * (D - 1));
  const QuadraticRoot z{T1 / tv, N1 / (tv * tv)};
  out.theta.push_back({"1+" + sd, std::nullopt, std::nullopt, z, root_of_unity_order(z)});
  const QuadElem zeta{NfElem(0), NfElem(1)}, zeta_inv{z.s / z.n, NfElem(-1) / z.n};
  for (int64_t x = 1; x < p; ++x)
    for (int64_t y = 0; y < p; ++y) {
      const int64_t j = mod(y * inverse_mod(x, p), p);
      const QuadElem a = qpow(z, zeta, j), b = qpow(z, zeta_inv, j);
      const NfElem c = tv * eps(x);
      const QuadElem pr{c * (a.a + th_m1 * b.a), c * (a.b + th_m1 * b.b)};
      if (!is_zero(pr.b)) throw ConsistencyError(std::string(kNoPair) + " (prediction is not in the Hecke field)");
      check({"x = " + std::to_string(x) + ", y = " + std::to_string(y), image(x, y),
             trace_of(rho_at(t, image(x, y))), pr.a},
            out);
    }
  return out;
}

}  // namespace

AdmissiblePair identify_pair(const CuspidalType& t, std::optional<std::pair<int64_t, int64_t>> alpha,
                             int64_t limit) {
  if (t.p == 2) throw UsageError("identify_pair: p must be odd");
  AdmissiblePair out = t.k_class == KClass::Unramified ? unramified_pair(t, alpha) : ramified_pair(t, limit);
  out.caveat = kCaveat;
  return out;
}

}  // namespace lcomp
