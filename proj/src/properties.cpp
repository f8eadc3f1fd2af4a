#include "lcomp/properties.hpp"

#include <sstream>

namespace lcomp {

namespace {

PropertyCheck check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

// Smallest prime m prime to the level with m != 1 mod p^u, so twists see it.
int64_t probe_prime(const Newform& f, int64_t pu) {
  for (int64_t m = 2;; ++m)
    if (is_prime(m) && f.level % m != 0 && (pu <= 2 || mod(m, pu) != 1)) return m;
}

struct RootData {
  NfElem z;
  int64_t n;
};

RootData root_for(int64_t e) {
  if (e <= 2) return {NfElem(e == 1 ? 1 : -1), e};
  FieldPtr F = NumberField::make(cyclotomic(static_cast<int>(e)), "z");
  return {NfElem::generator(F), e};
}

std::vector<PropertyCheck> commutation_relations(const CuspidalType& t) {
  const Newform& f = t.ts.f;
  const ModularSymbolSpace& M = *f.space;
  const int64_t pr = ipow(f.p, f.r), N = f.N(), pu = ipow(f.p, f.r / 2);
  const int64_t m = probe_prime(f, pu);
  const QMatrix T = M.hecke(m), S = M.star();
  const NfMatrix Tn = to_nf(T), Sn = to_nf(S);
  bool r1 = true, r2 = true;
  for (const auto& chi : enumerate_characters(pu)) {
    const RootData z = root_for(chi.order());
    const NfMatrix R = twist_operator(M, chi, z.z, z.n);
    r1 = r1 && Tn * R == chi.value(m, z.z, z.n) * (R * Tn);
    r2 = r2 && Sn * R == NfElem(chi.parity()) * (R * Sn);
  }
  const QMatrix W = M.atkin_lehner(pr);
  const QMatrix mp_inv = M.diamond(inverse_mod(p_part_lift(m, N, pr), N * pr));
  std::ostringstream probe;
  probe << "m = " << m << ", characters mod " << pu;
  return {check("T_m R_chi = chi(m) R_chi T_m", r1, probe.str()),
          check("star R_chi = chi(-1) R_chi star", r2, probe.str()),
          check("T_m W = W T_m <m_p>^-1", T * W == W * T * mp_inv, probe.str()),
          check("star W = <(-1)_p> W star", S * W == M.diamond(p_part_lift(-1, N, pr)) * W * S)};
}

bool is_zero_vec(const NfVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace

std::vector<PropertyCheck> type_properties(const CuspidalType& t, size_t samples, uint64_t seed) {
  std::vector<PropertyCheck> out;
  const int64_t expected_dim = euler_phi(ipow(t.p, t.r / 2));
  out.push_back(check("dim X_f = phi(p^floor(r/2))", static_cast<int64_t>(t.dim()) == expected_dim,
                      std::to_string(t.dim()) + " vs " + std::to_string(expected_dim)));
  for (auto& c : commutation_relations(t)) out.push_back(std::move(c));

  // Scalars act by the central character, and the diagonal torus moves sigma
  // (the first basis vector) by eps_p of the lower-right entry.
  NfVec e0(t.dim(), NfElem(0));
  e0[0] = NfElem(1);
  bool scalars = true, torus = true;
  for (int64_t a = 1; a < t.modulus; ++a) {
    if (gcd64(a, t.p) != 1) continue;
    scalars = scalars && rho_at(t, {0, a, 0, 0, a}) == t.central.on_units(a) * NfMatrix::identity(t.dim());
    for (int64_t d = 1; d < t.modulus; ++d) {
      if (gcd64(d, t.p) != 1) continue;
      NfVec w = rho_at(t, {0, a, 0, 0, d}) * e0;
      w[0] = w[0] - t.central.on_units(d);
      torus = torus && is_zero_vec(w);
    }
  }
  out.push_back(check("scalars act by the central character", scalars));
  out.push_back(check("diag(a, d) sigma = eps_p(d) sigma", torus));

  try {
    auto rep = verify_homomorphism(t, samples, seed);
    out.push_back(check("rho(xy) = rho(x) rho(y)", rep.pairs >= samples,
                        std::to_string(rep.pairs) + " pairs, " + std::to_string(rep.conjugates) + " conjugates"));
  } catch (const ConsistencyError& e) {
    out.push_back(check("rho(xy) = rho(x) rho(y)", false, e.what()));
  }
  const size_t comm = commutant_dimension(t);
  out.push_back(check("commutant is the scalars", comm == 1, "dimension " + std::to_string(comm)));
  const int expected_r = t.k_class == KClass::Unramified ? 2 * t.n : t.n + 1;
  out.push_back(check("conductor exponent from the level of the type", expected_r == t.r,
                      std::to_string(t.r) + " vs " + std::to_string(expected_r)));

  if (t.p != 2) {
    try {
      auto pair = identify_pair(t);
      bool ok = pair.checked.size() >= 3;
      for (const auto& m : pair.checked) ok = ok && m.trace == m.predicted;
      for (const auto& th : pair.theta)
        if (th.root && th.image) ok = ok && th.root->n == t.central.on_units(t.det(*th.image).second);
      out.push_back(check("trace formula at minimal elements", ok,
                          std::to_string(pair.checked.size()) + " elements"));
    } catch (const std::exception& e) {
      out.push_back(check("trace formula at minimal elements", false, e.what()));
    }
  }
  return out;
}

}  // namespace lcomp
