#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcomp/newforms.hpp"

namespace lcomp {

/// Polynomial over Q in x, e.g. "x^2+2x+2", "x^4 + 9", "-1/2*x + 3".
QPoly parse_qpoly(const std::string& s);

/// "trivial", or "u=k/n,..." giving chi(u) = exp(2 pi i k/n) on units u that
/// generate (Z/level)^x. A prefix "m:" defines the character modulo m | level
/// and extends it, e.g. "5:2=1/4".
DirichletCharacter parse_character(const std::string& s, int64_t level);

/// "a<ell>=<rational>" fixes a_ell; "a<ell>~<poly>" fixes its minimal polynomial.
struct EigenConstraint {
  int64_t ell = 0;
  std::optional<Rational> value;
  std::optional<QPoly> minpoly;
  std::string text;
};
EigenConstraint parse_constraint(const std::string& s);
bool satisfies(Newform& f, const EigenConstraint& c);

std::vector<Newform> select_orbits(std::vector<Newform> forms, const std::vector<EigenConstraint>& cs);
/// Forms of the given level, weight and character, filtered by constraints.
std::vector<Newform> find_newforms(const DirichletCharacter& eps, int64_t p, int k,
                                   const std::vector<std::string>& constraints = {});

}  // namespace lcomp
