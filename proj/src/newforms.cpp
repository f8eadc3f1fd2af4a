#include "lcomp/newforms.hpp"

#include <algorithm>

namespace lcomp {

namespace {

std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Subspace spanned by coordinate vectors relative to the basis of W.
Subspace<Rational> lift(const Subspace<Rational>& W, const Subspace<Rational>& inner) {
  QMatrix Bt = W.basis.transpose();
  std::vector<QVec> vecs;
  for (const auto& v : inner.vectors()) vecs.push_back(Bt * v);
  return span(vecs, W.ambient);
}

QMatrix restrict_checked(const QMatrix& T, const Subspace<Rational>& W) {
  try {
    return restrict_to(T, W);
  } catch (const DomainError&) {
    throw UsageError("eigen_orbits: subspace is not Hecke-stable");
  }
}

struct Piece {
  explicit Piece(Subspace<Rational> w) : W(std::move(w)) {}
  Subspace<Rational> W;
  bool done = false;
  QMatrix T;  // generator of the Hecke action, restricted to W
  QPoly f;    // its (irreducible) characteristic polynomial
};

// Split W by the primary decomposition of the ambient operator Tamb; pieces
// with square-free irreducible characteristic polynomial are finished.
std::vector<Piece> split(const Subspace<Rational>& W, const QMatrix& Tamb) {
  QMatrix T = restrict_checked(Tamb, W);
  auto fac = factor_rational_poly(charpoly(T));
  if (fac.size() == 1) {
    Piece pc(W);
    if (fac[0].second == 1) {
      pc.done = true;
      pc.T = T;
      pc.f = fac[0].first;
    }
    return {pc};
  }
  std::vector<Piece> out;
  for (const auto& [f, e] : fac)
    for (auto& q : split(lift(W, kernel(evaluate(poly_pow(f, e), T))), Tamb)) out.push_back(std::move(q));
  return out;
}

}  // namespace

int64_t sturm_bound(const GammaH& g, int k) { return (k * g.index() + 11) / 12; }

Subspace<Rational> new_subspace(const ModularSymbolSpace& sp, int64_t p) {
  int64_t N = sp.level();
  if (p < 2 || N % p != 0) throw UsageError("new_subspace: p must divide the level");
  ModularSymbolSpace low(sp.group().image_mod(N / p), sp.weight());
  auto [a, b] = degeneracy_matrices(sp, low, p);
  std::vector<QVec> rows = a.row_list();
  for (auto& r : b.row_list()) rows.push_back(r);
  return kernel(QMatrix::from_rows(rows, sp.dim()));
}

Subspace<Rational> new_cuspidal_subspace(const ModularSymbolSpace& sp) {
  Subspace<Rational> V = sp.cuspidal_subspace();
  for (int64_t q : prime_divisors(sp.level())) V = intersect(V, new_subspace(sp, q));
  return V;
}

GammaH type_group(const DirichletCharacter& eps, int64_t p) {
  const int64_t L = eps.modulus();
  const int r = valuation(L, p);
  const int64_t pr = ipow(p, r);
  const int64_t N = L / pr;
  SplitCharacter s = split_at_p(eps, p);
  const int c = valuation(s.eps_p.conductor(), p);
  const int64_t pm = ipow(p, std::max(c, r / 2));
  std::vector<int64_t> elems;
  for (int64_t u = 1; u < L; ++u) {
    if (gcd64(u, L) != 1 || (pm > 1 && mod(u, pm) != 1)) continue;
    if (N > 1 && !s.eps_N(mod(u, N)).is_one()) continue;
    elems.push_back(u);
  }
  return GammaH(L, elems);
}

int64_t Newform::N() const { return level / ipow(p, r); }

NfElem Newform::character_value(int64_t u) const {
  if (gcd64(u, level) != 1) return NfElem(0);
  RootOfUnity z = character(mod(u, level));
  return zeta.pow(z.exponent * (character.order() / z.order));
}

std::string Newform::label() const {
  std::string f = hecke_field ? hecke_field->modulus().to_string("x") : "x";
  return std::to_string(level) + "." + std::to_string(weight) + "." + character.to_string() + "." + f;
}

NfElem eigenvalue(Newform& f, int64_t ell) {
  if (ell == 1) return NfElem(1);
  auto it = f.eigenvalues.find(ell);
  if (it != f.eigenvalues.end()) return it->second;
  QMatrix T = restrict_checked(f.space->hecke(ell), f.orbit_plus);
  NfVec w = lcomp::apply(T, f.orbit_coords);
  size_t i0 = 0;
  while (is_zero(f.orbit_coords[i0])) ++i0;
  NfElem a = w[i0] / f.orbit_coords[i0];
  for (size_t i = 0; i < w.size(); ++i)
    if (!(w[i] == a * f.orbit_coords[i])) throw ConsistencyError("eigenvalue: sigma_f^+ is not a T_n eigenvector");
  f.eigenvalues.emplace(ell, a);
  return a;
}

bool eigenvalue_has_minpoly(Newform& f, int64_t ell, const QPoly& mp) {
  return eigenvalue(f, ell).minpoly() == mp.monic();
}

bool attach_eigenvector(Newform& f, NfVec v) {
  const ModularSymbolSpace& M = *f.space;
  const size_t n = M.dim(), d = f.orbit_plus.dim();
  if (v.size() != d) throw UsageError("attach_eigenvector: wrong coordinate length");
  NfVec amb(n, NfElem(0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_zero(f.orbit_plus.basis(i, j))) amb[j] = amb[j] + v[i] * NfElem(f.orbit_plus.basis(i, j));
  size_t j0 = 0;
  while (j0 < n && is_zero(amb[j0])) ++j0;
  if (j0 == n) throw UsageError("attach_eigenvector: zero vector");
  NfElem s = amb[j0].inverse();
  for (auto& c : amb) c = c * s;
  for (auto& c : v) c = c * s;
  f.eigensymbol = amb;
  f.orbit_coords = v;
  f.eigenvalues.clear();

  // Diamond eigenvalues pick out the embedding of the character.
  const UnitGroup G = UnitGroup::of(f.level);
  size_t i0 = 0;
  while (is_zero(v[i0])) ++i0;
  std::vector<NfElem> dvals;
  for (int64_t g : G.gens) {
    NfVec w = lcomp::apply(restrict_to(M.diamond(g), f.orbit_plus), v);
    dvals.push_back(w[i0] / v[i0]);
  }
  const int64_t e = f.character.order();
  std::vector<NfElem> cands;
  if (e == 1) {
    cands = {NfElem(1)};
  } else if (e == 2) {
    cands = {NfElem(-1)};
  } else {
    cands = roots_in_field(cyclotomic(static_cast<int>(e)), f.hecke_field);
  }
  for (const auto& z : cands) {
    bool ok = true;
    for (size_t t = 0; t < G.gens.size() && ok; ++t) {
      RootOfUnity c = f.character(G.gens[t]);
      ok = z.pow(c.exponent * (e / c.order)) == dvals[t];
    }
    if (ok) {
      f.zeta = z;
      return true;
    }
  }
  return false;
}

std::vector<Newform> eigen_orbits(const SpacePtr& sp, const Subspace<Rational>& within, const DirichletCharacter& eps,
                                  int64_t p) {
  const ModularSymbolSpace& M = *sp;
  const int64_t L = M.level();
  if (eps.modulus() != L) throw UsageError("eigen_orbits: character modulus differs from the level");
  if (p < 2 || !is_prime(p)) throw UsageError("eigen_orbits: p must be prime");
  const size_t n = M.dim();

  QMatrix S = M.star() - QMatrix::identity(n);
  Subspace<Rational> V = intersect(within, kernel(S));
  const UnitGroup G = UnitGroup::of(L);
  for (int64_t g : G.gens) {
    RootOfUnity z = eps(g);
    V = intersect(V, kernel(evaluate(cyclotomic(static_cast<int>(z.order)), M.diamond(g))));
  }
  if (V.dim() == 0) return {};

  const int64_t bound = sturm_bound(M.group(), M.weight());
  std::vector<int64_t> primes;
  for (int64_t ell = 2; ell <= std::max<int64_t>(bound, 2); ++ell)
    if (is_prime(ell) && L % ell != 0) primes.push_back(ell);
  for (int64_t ell : prime_divisors(L))
    if (ell != p) primes.push_back(ell);

  std::vector<Piece> pieces{Piece(V)};
  auto all_done = [&] { return std::all_of(pieces.begin(), pieces.end(), [](const Piece& x) { return x.done; }); };
  for (int64_t ell : primes) {
    if (all_done()) break;
    std::vector<Piece> next;
    for (auto& pc : pieces) {
      if (pc.done) {
        next.push_back(std::move(pc));
        continue;
      }
      for (auto& q : split(pc.W, M.hecke(ell))) next.push_back(std::move(q));
    }
    pieces = std::move(next);
  }
  // Remaining pieces: try sums of two Hecke operators before giving up.
  const size_t tries = std::min<size_t>(primes.size(), 6);
  for (size_t a = 0; a < tries && !all_done(); ++a)
    for (size_t b = a + 1; b < tries && !all_done(); ++b) {
      std::vector<Piece> next;
      for (auto& pc : pieces) {
        if (pc.done) {
          next.push_back(std::move(pc));
          continue;
        }
        for (auto& q : split(pc.W, M.hecke(primes[a]) + M.hecke(primes[b]))) next.push_back(std::move(q));
      }
      pieces = std::move(next);
    }

  std::vector<Newform> out;
  for (const auto& pc : pieces) {
    if (!pc.done) continue;  // multiplicity > 1: not a newform orbit
    Newform f;
    f.level = L;
    f.p = p;
    f.r = valuation(L, p);
    f.weight = M.weight();
    f.character = eps;
    f.space = sp;
    f.orbit_plus = pc.W;
    NfElem x;
    if (pc.f.degree() == 1) {
      x = NfElem(-pc.f.coeff(0));
    } else {
      f.hecke_field = NumberField::make_trusted(pc.f, "a");
      x = NfElem::generator(f.hecke_field);
    }
    const size_t d = pc.W.dim();
    NfMatrix Tk = to_nf(pc.T);
    for (size_t i = 0; i < d; ++i) Tk(i, i) = Tk(i, i) - x;
    Subspace<NfElem> ker = kernel(Tk);
    if (ker.dim() != 1) throw ConsistencyError("eigen_orbits: eigenspace is not one-dimensional");
    if (!attach_eigenvector(f, ker.basis.row(0))) continue;
    for (int64_t ell = 2; ell <= bound; ++ell)
      if (is_prime(ell)) eigenvalue(f, ell);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Newform> newforms(const DirichletCharacter& eps, int64_t p, int k) {
  if (eps.parity() != (k % 2 == 0 ? 1 : -1)) return {};
  auto sp = std::make_shared<const ModularSymbolSpace>(type_group(eps, p), k);
  return eigen_orbits(sp, new_cuspidal_subspace(*sp), eps, p);
}

}  // namespace lcomp
