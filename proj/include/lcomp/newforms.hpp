#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lcomp/dirichlet.hpp"
#include "lcomp/factor.hpp"
#include "lcomp/modsym.hpp"
#include "lcomp/numberfield.hpp"

namespace lcomp {

using SpacePtr = std::shared_ptr<const ModularSymbolSpace>;

int64_t sturm_bound(const GammaH& g, int k);

/// p-new subspace of the ambient space: common kernel of the two degeneracy maps to level N/p.
Subspace<Rational> new_subspace(const ModularSymbolSpace& sp, int64_t p);
/// Cuspidal symbols that are new at every prime dividing the level.
Subspace<Rational> new_cuspidal_subspace(const ModularSymbolSpace& sp);

/// H = ker(eps_N) x ker((Z/p^r)^x -> (Z/p^m)^x), m = max(c, floor(r/2)), p^c = cond(eps_p).
GammaH type_group(const DirichletCharacter& eps, int64_t p);

/// One Galois orbit of newforms, with a chosen embedding: the generator of
/// hecke_field and the root of unity zeta fix the conjugate in the orbit.
struct Newform {
  int64_t level = 1;  // N p^r
  int64_t p = 0;
  int r = 0;
  int weight = 2;
  DirichletCharacter character;
  FieldPtr hecke_field;  // null for Q
  NfElem zeta;            // eps(u) = zeta^k(u), zeta of order character.order()
  std::map<int64_t, NfElem> eigenvalues;
  SpacePtr space;
  Subspace<Rational> orbit_plus;  // Q-rational plus part of the orbit
  NfVec eigensymbol;              // sigma_f^+ in ambient coordinates
  NfVec orbit_coords;             // sigma_f^+ in the basis of orbit_plus

  int64_t N() const;  // prime-to-p part of the level
  /// eps(u) inside hecke_field (0 off the units).
  NfElem character_value(int64_t u) const;
  std::string label() const;
};

/// Decompose the plus part of `within` (Hecke-stable) into Galois orbits with
/// character in the Galois orbit of eps; orbits with multiplicity > 1 are dropped.
std::vector<Newform> eigen_orbits(const SpacePtr& sp, const Subspace<Rational>& within, const DirichletCharacter& eps,
                                  int64_t p);

/// Installs the eigenvector with coordinates v (over f.hecke_field) in the basis
/// of f.orbit_plus: normalizes it, clears cached eigenvalues and fixes zeta.
/// Returns false if the diamond eigenvalues match no embedding of the character.
bool attach_eigenvector(Newform& f, NfVec v);

/// a_ell(f), computed on demand and cached.
NfElem eigenvalue(Newform& f, int64_t ell);

/// All newform orbits of level eps.modulus(), weight k, character eps inside the
/// modular symbols of type_group(eps, p).
std::vector<Newform> newforms(const DirichletCharacter& eps, int64_t p, int k);

/// True if a_ell(f) has minimal polynomial `mp` over Q.
bool eigenvalue_has_minpoly(Newform& f, int64_t ell, const QPoly& mp);

}  // namespace lcomp
