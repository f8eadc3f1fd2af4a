#pragma once

#include <optional>
#include <vector>

#include "lcomp/newforms.hpp"

namespace lcomp {

/// Span of the translates of sigma_f^+ under [[1, p^-u Z_p], [0, 1]], over the
/// Hecke field of f. basis[j] = t^j sigma_f^+ with t = [[1, p^-u], [0, 1]].
struct TypeSpace {
  Newform f;
  int u = 0;  // min(floor(r/2), r - c), p^c the conductor of eps_p
  int c = 0;
  std::vector<NfVec> basis;  // ambient coordinates
  NfMatrix translation;      // t in the coordinates of `basis`

  size_t dim() const { return basis.size(); }
  FieldPtr field() const { return f.hecke_field; }
  int64_t p() const { return f.p; }
  Mat2 translation_element() const;

  /// Coordinates of an ambient vector in `basis`; throws DomainError outside the span.
  NfVec coords(const NfVec& v) const;
  /// Matrix (column convention) of an ambient operator that preserves the span.
  NfMatrix restrict(const QMatrix& op) const;
  NfMatrix restrict(const NfMatrix& op) const;

 private:
  friend TypeSpace build_type_space(const Newform& f);
  std::vector<size_t> pivots_;
  NfMatrix pivot_inverse_;
};

TypeSpace build_type_space(const Newform& f);

/// Twist operator R_chi for chi of modulus p^n, normalized so that
/// T_m R_chi = chi(m) R_chi T_m. With normalizer_action's orientation of the
/// translations this is sum over u in (Z/p^n)^x of chi(u) [[1, u/p^n], [0, 1]].
/// `z` is a primitive n_z-th root of unity with chi.order() | n_z.
NfMatrix twist_operator(const ModularSymbolSpace& sp, const DirichletCharacter& chi, const NfElem& z, int64_t n_z);

/// f' = f (x) chi; chi has p-power modulus.
struct Twist {
  DirichletCharacter chi;
  Newform target;
};

/// nullopt when f is p-primitive; otherwise a twist of strictly smaller p-level.
std::optional<Twist> primitivity_test(const TypeSpace& ts);

struct TwistChain {
  Newform minimal;
  std::vector<DirichletCharacter> chars;  // minimal = f (x) chars[0] (x) chars[1] ...
};

TwistChain minimal_twist_chain(const Newform& f);

/// <m_p>: m mod p^r and 1 mod N, as a residue mod N p^r.
int64_t p_part_lift(int64_t m, int64_t N, int64_t pr);

}  // namespace lcomp
