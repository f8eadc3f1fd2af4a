#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lcomp/matrix.hpp"
#include "lcomp/rational.hpp"

namespace lcomp {

/// Gamma_H(N): matrices in SL2(Z) with c = 0 mod N and d in H.
class GammaH {
 public:
  /// H generated by `gens` (closure is taken); an empty list gives H = {1}.
  GammaH(int64_t N, const std::vector<int64_t>& gens);
  static GammaH gamma0(int64_t N);
  static GammaH gamma1(int64_t N);

  int64_t level() const { return N_; }
  const std::vector<int64_t>& elements() const { return H_; }  // sorted
  bool contains(int64_t d) const;
  bool contains_minus_one() const { return contains(N_ - 1); }
  /// Index of Gamma_H(N) in SL2(Z).
  int64_t index() const;
  /// Generators of H used for residual checks (a small generating set).
  std::vector<int64_t> generators() const;
  /// Image of H modulo a divisor M of N.
  GammaH image_mod(int64_t M) const;

 private:
  int64_t N_;
  std::vector<int64_t> H_;
  std::vector<int64_t> gens_;
};

using QMatrix = Matrix<Rational>;
using QVec = Vec<Rational>;

/// A point of P^1(Q): num/den with den >= 0, (1, 0) for infinity.
struct Cusp {
  Integer num, den;
  static Cusp infinity() { return Cusp{Integer(1), Integer(0)}; }
  static Cusp from(const Integer& a, const Integer& c);
};

/// Rational 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  Rational a, b, c, d;
  Rational det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  Cusp act(const Cusp& z) const;
  static Mat2 of(long a, long b, long c, long d) { return Mat2{Rational(a), Rational(b), Rational(c), Rational(d)}; }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  std::string to_string() const;
};

/// Homogeneous polynomial of degree w in X, Y: coeffs[i] multiplies X^i Y^(w-i).
using HomPoly = std::vector<Rational>;

/// P(aX + bY, cX + dY).
HomPoly substitute(const HomPoly& P, const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// Modular symbols S_k(Gamma_H(N), Q) via Manin symbols [X^i Y^(k-2-i), (c, d)].
/// Vectors are coordinates on the quotient ("ambient") basis; operator
/// matrices act on column vectors (column j is the image of basis vector j).
class ModularSymbolSpace {
 public:
  ModularSymbolSpace(GammaH group, int weight);

  const GammaH& group() const { return group_; }
  int64_t level() const { return group_.level(); }
  int weight() const { return k_; }
  size_t dim() const { return basis_gens_.size(); }
  size_t cuspidal_dim() const { return cuspidal_.dim(); }
  size_t num_manin_classes() const { return class_reps_.size(); }
  const Subspace<Rational>& cuspidal_subspace() const { return cuspidal_; }
  const QMatrix& boundary_matrix() const { return boundary_; }

  /// Coordinates of the Manin symbol [P, (c, d)]; zero if (c, d) is not in P^1(Z/N).
  QVec manin_symbol(const HomPoly& P, int64_t c, int64_t d) const;
  /// Coordinates of the general symbol P{alpha, beta} (continued fractions).
  QVec path_symbol(const HomPoly& P, const Cusp& alpha, const Cusp& beta) const;
  /// Basis element j as the pair (P, integral g in SL2(Z)) with e_j = [P, g].
  std::pair<HomPoly, Mat2> basis_symbol(size_t j) const;

  QMatrix hecke(int64_t n) const;
  QMatrix diamond(int64_t d) const;
  QMatrix star() const;
  QMatrix atkin_lehner(int64_t Q) const;
  /// Action P{a, b} -> det^{-(k-2)/2} (gP){ga, gb}; throws DomainError if g
  /// visibly fails to normalize Gamma (residual check) or the scaling is irrational.
  QMatrix normalizer_action(const Mat2& g, bool check = true) const;
  /// The same action, landing in another space (used for degeneracy maps).
  QMatrix action_into(const ModularSymbolSpace& target, const Mat2& g, bool normalize = true,
                      bool check = true) const;
  /// Images of one vector without building the full matrix.
  QVec act_on(const Mat2& g, const QVec& v) const;

 private:
  int64_t pair_index(int64_t c, int64_t d) const { return mod(c, level()) * level() + mod(d, level()); }
  int class_of(int64_t c, int64_t d) const { return pair_class_[static_cast<size_t>(pair_index(c, d))]; }
  void add_generator(QVec& out, size_t gen, const Rational& coeff) const;
  void build_classes();
  void build_relations();
  void build_boundary();
  Rational weight_scaling(const Rational& det) const;
  QVec image_of_symbol(const HomPoly& P, const Mat2& h, const Mat2& g, const ModularSymbolSpace& target,
                       const Rational& scale) const;

  GammaH group_;
  int k_, w_;
  std::vector<int> pair_class_;
  std::vector<std::pair<int64_t, int64_t>> class_reps_;
  // Each Manin generator (class * (w+1) + i) as a sparse combination of basis vectors.
  std::vector<std::vector<std::pair<size_t, Rational>>> gen_to_basis_;
  std::vector<size_t> basis_gens_;
  Subspace<Rational> cuspidal_;
  QMatrix boundary_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, QMatrix> cache_;
};

/// The two degeneracy maps to level N/p (H' = image of H): induced by the
/// identity and by diag(p, 1).
std::pair<QMatrix, QMatrix> degeneracy_matrices(const ModularSymbolSpace& high, const ModularSymbolSpace& low,
                                                int64_t p);

/// Heilbronn matrices of determinant n (Merel's set).
std::vector<std::array<int64_t, 4>> heilbronn_matrices(int64_t n);

}  // namespace lcomp
