#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcomp/localcomp.hpp"

namespace lcomp {

struct QuadraticExtension {
  enum class Kind { Unramified, Ramified } kind = Kind::Unramified;
  int64_t p = 0;
  int64_t d = 0;  // ramified: E = Q_p(sqrt d), d = p u with u = 1, -1 or the least non-residue
  std::string to_string() const;
};

/// Either root of x^2 - s x + n over the Hecke field. The two roots are the
/// values at an element and at its Galois conjugate, so the descriptor is
/// symmetric under the nontrivial automorphism of E.
struct QuadraticRoot {
  NfElem s, n;
  std::string to_string() const;
  friend bool operator==(const QuadraticRoot&, const QuadraticRoot&) = default;
};

struct ThetaValue {
  std::string element;  // e.g. "alpha", "sqrt(-3)", "1+sqrt(-3)", "p"
  std::optional<KElement> image;
  std::optional<NfElem> value;        // when theta is pinned exactly
  std::optional<QuadraticRoot> root;  // otherwise: either root
  std::optional<int64_t> order;       // as a root of unity
};

/// A minimal element where the trace formula was checked.
struct MinimalElement {
  std::string label;
  KElement image;
  NfElem trace;      // tr rho_f
  NfElem predicted;  // iota (theta(alpha) + theta(alpha^s))
};

struct AdmissiblePair {
  QuadraticExtension E;
  int iota = 1;
  std::vector<ThetaValue> theta;
  std::vector<MinimalElement> checked;
  std::vector<std::string> unresolved;  // generators on which theta is not pinned
  std::string caveat;
};

/// Trace formula tr rho_f(alpha) = iota (theta(alpha) + theta(alpha^s)) at minimal
/// elements, with theta = omega_p^-1 on Q_p^x. p must be odd. For unramified E the
/// canonical alpha is the companion matrix of the lexicographically first x^2 - t x + d
/// (t, d mod p^n) generating (O_E / p^n)^x modulo scalars; `alpha` overrides it.
AdmissiblePair identify_pair(const CuspidalType& t, std::optional<std::pair<int64_t, int64_t>> alpha = std::nullopt,
                             int64_t limit = 1000000);

/// Smallest k <= bound with x^k = 1.
std::optional<int64_t> root_of_unity_order(const NfElem& x, int64_t bound = 100000);
/// Smallest k with y^k = 1 in K[y] / (y^2 - s y + n): the order of either root
/// when the quadratic is irreducible, the lcm of the two orders when it splits.
std::optional<int64_t> root_of_unity_order(const QuadraticRoot& q, int64_t bound = 100000);

/// A character chi of Q_p^x seen through det on K: chi on Z_p^x is unit_part and
/// chi(p)^p_power = value (p_power is 2 when only chi(p)^2 is visible on K).
struct TwistCharacter {
  DirichletCharacter unit_part;
  NfElem zeta;  // primitive zeta_order-th root of unity for unit_part values
  int64_t zeta_order = 1;
  int p_power = 1;
  NfElem value;
  std::string to_string() const;
};

/// chi(det g) for g in K, with the stored exponent j of the central generator.
NfElem twist_value(const CuspidalType& t, const TwistCharacter& chi, const KElement& g);

/// Nontrivial quadratic chi with rho = rho (x) chi(det), in canonical order.
std::vector<TwistCharacter> quadratic_self_twists(const CuspidalType& t, int64_t limit = 1000000);
/// True iff no nontrivial quadratic character fixes rho (no admissible pair).
bool detect_exceptional(const CuspidalType& t, int64_t limit = 1000000);
/// First chi (canonical order of unit parts) with t1 = t2 (x) chi(det).
std::optional<TwistCharacter> twist_relation(const CuspidalType& t1, const CuspidalType& t2, int64_t limit = 1000000);

}  // namespace lcomp
