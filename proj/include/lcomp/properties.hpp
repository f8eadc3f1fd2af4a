#pragma once

#include <string>
#include <vector>

#include "lcomp/admissible.hpp"

namespace lcomp {

struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The structural identities every computed supercuspidal type must satisfy:
/// type space dimension, the twist / star / Atkin-Lehner commutation relations,
/// the action of scalars and the Borel on sigma, the homomorphism property on
/// `samples` random pairs, irreducibility, the conductor/level relation and, for
/// odd p, self-consistency of the admissible pair. Failures are reported, not thrown.
std::vector<PropertyCheck> type_properties(const CuspidalType& t, size_t samples = 100, uint64_t seed = 1);

}  // namespace lcomp
