#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcomp/numberfield.hpp"
#include "lcomp/rational.hpp"

namespace lcomp {

/// Cyclic decomposition of (Z/m)^x: generators g_i of orders n_i, built prime
/// power by prime power (for 2^e, e >= 3: -1 then 5) and lifted by CRT.
struct UnitGroup {
  int64_t modulus = 1;
  std::vector<int64_t> gens;
  std::vector<int64_t> orders;

  static UnitGroup of(int64_t modulus);
  int64_t order() const;
  /// Exponents k_i with u = prod g_i^k_i, for a unit u.
  std::vector<int64_t> log(int64_t u) const;
  /// All units in increasing order.
  std::vector<int64_t> units() const;
};

/// The root of unity exp(2 pi i * exponent / order), kept reduced.
struct RootOfUnity {
  int64_t order = 1;
  int64_t exponent = 0;

  static RootOfUnity make(int64_t order, int64_t exponent);
  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const { return make(order, -exponent); }
  RootOfUnity pow(int64_t k) const { return make(order, exponent * k); }
  bool is_one() const { return exponent == 0; }
  bool operator==(const RootOfUnity& o) const { return order == o.order && exponent == o.exponent; }
  std::string to_string() const;
};

/// A Dirichlet character modulo m with values in mu_e.
class DirichletCharacter {
 public:
  DirichletCharacter() : DirichletCharacter(1) {}
  /// Trivial character.
  explicit DirichletCharacter(int64_t modulus);
  /// Character with chi(g_i) = exp(2 pi i k_i / n_i) on the UnitGroup generators.
  static DirichletCharacter from_generator_exponents(int64_t modulus, const std::vector<int64_t>& k);
  /// Character given by its values on arbitrary units, which must generate the group.
  static DirichletCharacter from_values(int64_t modulus, const std::vector<std::pair<int64_t, RootOfUnity>>& values);

  int64_t modulus() const { return modulus_; }
  /// Order e of the character (values lie in mu_e).
  int64_t order() const { return order_; }
  const UnitGroup& group() const { return group_; }
  /// Exponents k_i relative to the group generators (chi(g_i) = zeta_{n_i}^{k_i}).
  const std::vector<int64_t>& generator_exponents() const { return k_; }

  bool is_unit(int64_t u) const { return gcd64(u, modulus_) == 1; }
  /// chi(u); throws UsageError when u is not a unit.
  RootOfUnity operator()(int64_t u) const;
  /// chi(u) as a field element given a primitive n-th root of unity z, order() | n;
  /// zero off the units.
  NfElem value(int64_t u, const NfElem& z, int64_t n) const;

  bool is_trivial() const { return order_ == 1; }
  int parity() const;  // chi(-1)
  int64_t conductor() const;
  DirichletCharacter primitive() const;
  DirichletCharacter inverse() const;
  DirichletCharacter pow(int64_t k) const;
  /// Same character viewed modulo a multiple of the modulus.
  DirichletCharacter extend(int64_t new_modulus) const;
  /// Restriction to a divisor d of the modulus; requires conductor | d.
  DirichletCharacter restrict_to(int64_t d) const;

  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);
  friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) { return !(a == b); }

  /// "trivial" or "g1=k1/n1,g2=k2/n2" over the generators (value exp(2 pi i k/n)).
  std::string to_string() const;

 private:
  void finish();
  int64_t modulus_;
  UnitGroup group_;
  std::vector<int64_t> k_;       // k_i mod n_i
  int64_t order_ = 1;
  std::vector<int64_t> table_;  // exponent mod order_ per residue, -1 off units
};

/// All characters modulo m, lexicographic in the generator exponents.
std::vector<DirichletCharacter> enumerate_characters(int64_t modulus);

struct SplitCharacter {
  DirichletCharacter eps_N;  // modulus N
  DirichletCharacter eps_p;  // modulus p^r
};

/// eps = eps_N * eps_p with eps_N mod N and eps_p mod p^r, p not dividing N.
SplitCharacter split_at_p(const DirichletCharacter& eps, int64_t p);

/// The restriction omega_p of the adelized central character to Q_p^x:
/// omega_p on Z_p^x is eps_p^-1 and omega_p(p) = eps_N(p) * p^h (h = 0 here).
struct LocalCharacterData {
  int64_t p = 0;
  DirichletCharacter unit_part;
  RootOfUnity value_at_p;
  Rational half_integer_exponent = 0;
};

LocalCharacterData local_component(const DirichletCharacter& eps, int64_t p);

/// A primitive n-th root of unity inside `field`, or throws if none exists.
NfElem primitive_root_of_unity(const FieldPtr& field, int64_t n);

}  // namespace lcomp
