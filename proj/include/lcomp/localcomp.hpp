#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcomp/typespace.hpp"

namespace lcomp {

/// chi(u) on Z_p^x through unit_part (values zeta^k in `field`), and
/// chi(p) = value_at_p * p^p_exponent with p_exponent in (1/2)Z.
struct SmoothCharacterQp {
  int64_t p = 0;
  DirichletCharacter unit_part;  // modulus a power of p
  NfElem zeta;                   // primitive zeta_order-th root of unity
  int64_t zeta_order = 1;
  NfElem value_at_p;
  Rational p_exponent = 0;

  NfElem on_units(int64_t u) const { return unit_part.value(u, zeta, zeta_order); }
  int conductor_exponent() const { return valuation(unit_part.conductor(), p); }
  std::string to_string() const;
};

enum class KClass { Unramified, Ramified };

/// An element of K modulo K_n.
///  Unramified: p^j [[a, b], [c, d]] with entries mod p^n.
///  Ramified:   Pi^j [[a, b], [p c, d]] with Pi = [[0, 1], [-p, 0]] and all
///              entries mod p^(n/2) (n is even for ramified K).
/// j is reduced modulo CuspidalType::period.
struct KElement {
  int64_t j = 0;
  int64_t a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const KElement&, const KElement&) = default;
  friend auto operator<=>(const KElement&, const KElement&) = default;
  std::string to_string() const;
};

struct CuspidalType {
  KClass k_class = KClass::Unramified;
  int64_t p = 0;
  int r = 0;
  int n = 0;        // level: r = 2n (unramified) or r = n + 1 (ramified)
  int64_t modulus;  // entries of KElement are taken mod this
  int64_t period;   // order of the central generator image (p I or Pi)
  TypeSpace ts;
  NfMatrix rho_central;  // rho(p I) (unramified) or rho(Pi) (ramified)
  std::vector<std::pair<KElement, NfMatrix>> sk_gens;  // generators of S(K) and their images
  std::vector<int64_t> lambda_gens;                    // generators a of (Z/modulus)^x
  std::vector<NfMatrix> lambda;                        // rho_f(diag(a, 1))
  UnitGroup det_group;
  SmoothCharacterQp central;  // central character of rho_f, i.e. omega_p^-1
  std::shared_ptr<std::map<KElement, NfMatrix>> sk_cache = std::make_shared<std::map<KElement, NfMatrix>>();

  size_t dim() const { return ts.dim(); }
  FieldPtr field() const { return ts.field(); }

  KElement identity() const { return KElement{}; }
  KElement mul(const KElement& x, const KElement& y) const;
  KElement inv(const KElement& x) const;
  KElement normalize(KElement x) const;
  /// det as (p-adic valuation, unit mod modulus).
  std::pair<int64_t, int64_t> det(const KElement& x) const;
  bool contains(const KElement& x) const;  // unit determinant, Iwahori shape
  std::vector<KElement> group_generators() const;
  /// Number of elements of K / (K_n <central^period>).
  int64_t group_order() const;
  std::vector<KElement> elements(int64_t limit) const;
};

struct LocalComponent {
  enum class Kind { PrincipalSeries, Special, Supercuspidal } kind;
  std::optional<SmoothCharacterQp> chi1, chi2;  // PS: both; Special: chi1 (pi = St (x) chi1)
  std::optional<CuspidalType> type;  // type of the minimal twist
  std::vector<DirichletCharacter> twist_chars;  // minimal twist = f (x) twist_chars[0] (x) ...
  std::string kind_name() const;
};

/// Step 1: principal series or special from a_p != 0; supercuspidal otherwise.
/// Supercuspidal components carry no type yet (see build_cuspidal_type).
LocalComponent classify(Newform& f);

/// alpha in SL_2(Z) with alpha = target mod p^M, alpha = I mod N.
Mat2 lift_to_integer_matrix(int64_t a, int64_t b, int64_t c, int64_t d, int64_t pM, int64_t N);

/// Steps 5 and 6 for a p-primitive supercuspidal f.
CuspidalType build_cuspidal_type(const Newform& f);
LocalComponent local_component(Newform& f);

/// rho_f on S(K), evaluated by lifting s to SL_2(Z): s must have det 1.
NfMatrix rho_on_sk(const CuspidalType& t, const KElement& s);
NfMatrix rho_at(const CuspidalType& t, const KElement& g);

struct ClassEntry {
  KElement rep;
  int64_t size;
  NfElem trace;
};
std::vector<ClassEntry> character_table(const CuspidalType& t, int64_t limit = 1000000);
/// Index of the class containing g in the table.
size_t class_of(const CuspidalType& t, const std::vector<ClassEntry>& table, const KElement& g);

struct HomomorphismReport {
  size_t pairs = 0;
  size_t conjugates = 0;
};
/// Exact check rho(xy) = rho(x) rho(y) on random pairs and trace invariance under
/// conjugation; throws ConsistencyError with the witness on failure.
HomomorphismReport verify_homomorphism(const CuspidalType& t, size_t samples, uint64_t seed = 1);

/// Commutant of the generator images (irreducible iff 1-dimensional).
size_t commutant_dimension(const CuspidalType& t);

}  // namespace lcomp
