#pragma once

#include <utility>
#include <vector>

#include "lcomp/numberfield.hpp"
#include "lcomp/poly.hpp"

namespace lcomp {

using QFactorization = std::vector<std::pair<QPoly, int>>;

/// Factors a nonzero rational polynomial into monic irreducibles with
/// multiplicities, sorted by degree and then coefficients. Constants give {}.
QFactorization factor_rational_poly(const QPoly& p);

bool is_irreducible(const QPoly& p);

/// Square-free decomposition: pairs (a_i, i) with p = c * prod a_i^i, a_i monic.
QFactorization squarefree_decomposition(const QPoly& p);

using NfFactorization = std::vector<std::pair<NfPoly, int>>;

/// Factors a polynomial with coefficients in `field` into monic irreducibles
/// over that field (norm-based splitting).
NfFactorization factor_over_field(const NfPoly& p, const FieldPtr& field);

/// Roots in `field` of a polynomial with coefficients in `field`, sorted by coordinates.
std::vector<NfElem> roots_in_field(const NfPoly& p, const FieldPtr& field);
std::vector<NfElem> roots_in_field(const QPoly& p, const FieldPtr& field);

/// A field L = F[y]/(h) presented by a single generator over Q, with the
/// images of the generator of F and of y.
struct Extension {
  FieldPtr field;
  NfElem base_generator;  // image of F's generator in L
  NfElem new_root;        // image of y in L
};

/// Adjoins a root of `h` (irreducible over F, or over Q when F is null) to F.
Extension adjoin_root(const FieldPtr& base, const NfPoly& h, const std::string& var = "a");

/// Smallest field containing F and a root of the rational polynomial q: if q
/// has a root in F that root is used and the field is unchanged.
Extension adjoin_rational_root(const FieldPtr& base, const QPoly& q, const std::string& var = "a");

}  // namespace lcomp
