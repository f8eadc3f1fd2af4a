#include "lcomp/typespace.hpp"

namespace lcomp {

namespace {

NfMatrix nf_identity(size_t n) {
  NfMatrix I(n, n);
  for (size_t i = 0; i < n; ++i) I(i, i) = NfElem(1);
  return I;
}

// Translation [[1, u / p^n], [0, 1]].
Mat2 translate(int64_t u, int64_t pn) { return Mat2{Rational(1), make_rational(u, pn), Rational(0), Rational(1)}; }

}  // namespace

int64_t p_part_lift(int64_t m, int64_t N, int64_t pr) {
  // x = 1 + N t with N t = m - 1 (mod p^r)
  int64_t t = mod((m - 1) * inverse_mod(N, pr), pr);
  return mod(1 + N * t, N * pr);
}

Mat2 TypeSpace::translation_element() const { return translate(1, ipow(f.p, u)); }

NfVec TypeSpace::coords(const NfVec& v) const {
  const size_t d = dim();
  NfVec w(d, NfElem(0));
  for (size_t i = 0; i < d; ++i) w[i] = v[pivots_[i]];
  NfVec c = pivot_inverse_ * w;
  for (size_t j = 0; j < v.size(); ++j) {
    NfElem s(0);
    for (size_t i = 0; i < d; ++i)
      if (!is_zero(basis[i][j])) s = s + c[i] * basis[i][j];
    if (!(s == v[j])) throw DomainError("TypeSpace::coords: vector outside the type space");
  }
  return c;
}

NfMatrix TypeSpace::restrict(const QMatrix& op) const {
  const size_t d = dim();
  NfMatrix out(d, d);
  for (size_t j = 0; j < d; ++j) {
    NfVec c = coords(lcomp::apply(op, basis[j]));
    for (size_t i = 0; i < d; ++i) out(i, j) = c[i];
  }
  return out;
}

NfMatrix TypeSpace::restrict(const NfMatrix& op) const {
  const size_t d = dim();
  NfMatrix out(d, d);
  for (size_t j = 0; j < d; ++j) {
    NfVec c = coords(op * basis[j]);
    for (size_t i = 0; i < d; ++i) out(i, j) = c[i];
  }
  return out;
}

TypeSpace build_type_space(const Newform& f) {
  if (f.r < 1) throw UsageError("build_type_space: f must have positive p-level");
  TypeSpace ts;
  ts.f = f;
  ts.c = valuation(split_at_p(f.character, f.p).eps_p.conductor(), f.p);
  ts.u = std::min(f.r / 2, f.r - ts.c);
  const int64_t pu = ipow(f.p, ts.u);
  const size_t n = f.space->dim();
  const QMatrix t = f.space->normalizer_action(translate(1, pu));

  ts.basis.push_back(f.eigensymbol);
  NfVec next = lcomp::apply(t, f.eigensymbol);
  for (int64_t step = 1;; ++step) {
    if (step > pu) throw ConsistencyError("build_type_space: translates do not stabilize");
    std::vector<NfVec> rows = ts.basis;
    rows.push_back(next);
    if (rank(NfMatrix::from_rows(rows, n)) == ts.basis.size()) break;
    ts.basis.push_back(next);
    next = lcomp::apply(t, next);
  }

  const size_t d = ts.basis.size();
  ts.pivots_ = span(ts.basis, n).pivots;
  NfMatrix S(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) S(i, j) = ts.basis[j][ts.pivots_[i]];
  ts.pivot_inverse_ = inverse(S);
  ts.translation = ts.restrict(t);
  return ts;
}

NfMatrix twist_operator(const ModularSymbolSpace& sp, const DirichletCharacter& chi, const NfElem& z, int64_t n_z) {
  const int64_t pn = chi.modulus();
  const size_t n = sp.dim();
  NfMatrix R(n, n);
  for (int64_t u = 1; u < pn; ++u) {
    if (!chi.is_unit(u)) continue;
    NfElem c = chi.value(u, z, n_z);
    QMatrix A = sp.normalizer_action(translate(u, pn));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!is_zero(A(i, j))) R(i, j) = R(i, j) + c * NfElem(A(i, j));
  }
  if (pn == 1) return nf_identity(n);
  return R;
}

namespace {

std::vector<int64_t> ell_list(const Newform& f) {
  std::vector<int64_t> out;
  const int64_t bound = std::max<int64_t>(sturm_bound(f.space->group(), f.weight), 2);
  for (int64_t ell = 2; ell <= bound; ++ell)
    if (is_prime(ell) && f.level % ell != 0) out.push_back(ell);
  return out;
}

// A conjugate of some orbit in gs with a_ell = chi(ell) a_ell(f), over `field`.
std::optional<Newform> match_twist(Newform& f, std::vector<Newform>& gs, const DirichletCharacter& chi,
                                   const FieldPtr& field, const NfElem& f_gen, const NfElem& z, int64_t n_z) {
  const auto ells = ell_list(f);
  for (auto& g : gs) {
    const size_t d = g.orbit_plus.dim();
    std::vector<NfVec> rows;
    for (int64_t ell : ells) {
      NfMatrix A = to_nf(restrict_to(g.space->hecke(ell), g.orbit_plus));
      NfElem a = chi.value(ell, z, n_z) * embed(eigenvalue(f, ell), f_gen);
      for (size_t i = 0; i < d; ++i) A(i, i) = A(i, i) - a;
      for (auto& r : A.row_list()) rows.push_back(r);
    }
    Subspace<NfElem> ker = kernel(NfMatrix::from_rows(rows, d));
    if (ker.dim() == 0) continue;
    if (ker.dim() > 1) throw ConsistencyError("primitivity_test: twisted eigenspace is not a line");
    Newform h = g;
    h.hecke_field = field;
    if (!attach_eigenvector(h, ker.basis.row(0)))
      throw ConsistencyError("primitivity_test: twisted character does not match");
    return h;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Twist> primitivity_test(const TypeSpace& ts) {
  const Newform& f0 = ts.f;
  const int64_t p = f0.p, L = f0.level, N = f0.N();
  const ModularSymbolSpace low(f0.space->group().image_mod(L / p), f0.weight);
  auto [a, b] = degeneracy_matrices(*f0.space, low, p);
  bool zero = true;
  for (const auto& v : ts.basis)
    for (const QMatrix* m : {&a, &b})
      for (const auto& x : lcomp::apply(*m, v)) zero = zero && is_zero(x);
  if (zero) return std::nullopt;

  Newform f = f0;
  const int64_t ef = f.character.order();
  for (const auto& chi : enumerate_characters(ipow(p, ts.u))) {
    if (chi.is_trivial()) continue;
    // One root of unity of order lcm(ef, ord chi) compatible with f.zeta, so
    // that eps and chi are embedded coherently.
    const int64_t M = ef / gcd64(ef, chi.order()) * chi.order();
    Extension ext = adjoin_rational_root(f.hecke_field, cyclotomic(static_cast<int>(M)));
    NfElem zt = embed(f.zeta, ext.base_generator), w;
    bool got = false;
    for (const auto& c : roots_in_field(cyclotomic(static_cast<int>(M)), ext.field))
      if (c.pow(M / ef) == zt) {
        w = c;
        got = true;
        break;
      }
    if (!got) throw ConsistencyError("primitivity_test: no compatible root of unity");
    DirichletCharacter eps2 = f.character * chi.extend(L) * chi.extend(L);
    for (int rr = 0; rr < f.r; ++rr) {
      const int64_t M2 = N * ipow(p, rr);
      if (M2 % eps2.conductor() != 0) continue;
      auto gs = newforms(eps2.restrict_to(M2), p, f.weight);
      auto h = match_twist(f, gs, chi, ext.field, ext.base_generator, w, M);
      if (h) return Twist{chi, std::move(*h)};
    }
  }
  throw ConsistencyError("primitivity_test: degeneracy images are nonzero but no twist was found");
}

TwistChain minimal_twist_chain(const Newform& f) {
  TwistChain out{f, {}};
  for (int step = 0; out.minimal.r > 0; ++step) {
    if (step > f.r) throw ConsistencyError("minimal_twist_chain: too many steps");
    auto t = primitivity_test(build_type_space(out.minimal));
    if (!t) break;
    out.chars.push_back(t->chi);
    out.minimal = std::move(t->target);
  }
  return out;
}

}  // namespace lcomp
