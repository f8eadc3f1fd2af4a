#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lcomp/poly.hpp"
#include "lcomp/rational.hpp"

namespace lcomp {

template <class T>
using Vec = std::vector<T>;

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(size_t rows, size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw UsageError("Matrix: data size mismatch");
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<T>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw UsageError("Matrix::from_rows: ragged rows");
      for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// Builds from nested integer literals, e.g. {{1,0},{0,1}}.
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    size_t i = 0;
    for (const auto& row : rows) {
      size_t j = 0;
      for (long v : row) m(i, j++) = T(v);
      ++i;
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> row(size_t i) const { return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<T> col(size_t j) const {
    Vec<T> v(rows_, T(0));
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vec<T>> row_list() const {
    std::vector<Vec<T>> out;
    for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  void set_row(size_t i, const Vec<T>& v) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void set_col(size_t j, const Vec<T>& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

  T trace() const {
    T t(0);
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }
  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw UsageError("Matrix-vector product: shape mismatch");
    Vec<T> out(a.rows_, T(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(v[k]) || is_zero(a(i, k))) continue;
        out[i] = out[i] + a(i, k) * v[k];
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] + b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] - b.data_[i];
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& v : c.data_) v = s * v;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (size_t j = 0; j < cols_; ++j) {
        if (j) os << ", ";
        os << scalar_str((*this)(i, j));
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

  /// Applies f to every entry.
  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  static std::string scalar_str(const Rational& r) { return r.get_str(); }
  template <class U>
  static std::string scalar_str(const U& u) {
    return u.to_string();
  }
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("Matrix sum: shape mismatch");
  }
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  return os << m.to_string();
}

// ---------------------------------------------------------------------------
// Echelon forms. Every routine uses the leftmost-pivot convention with pivot
// entries scaled to 1, so results are canonical and comparable exactly.

/// Reduces m in place to reduced row echelon form; returns pivot columns.
template <class T>
std::vector<size_t> rref_in_place(Matrix<T>& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
Matrix<T> rref(Matrix<T> m) {
  rref_in_place(m);
  return m;
}

template <class T>
size_t rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

/// A subspace of T^n stored as a reduced-echelon row basis.
template <class T>
struct Subspace {
  size_t ambient = 0;
  Matrix<T> basis;  // rows, reduced echelon
  std::vector<size_t> pivots;

  size_t dim() const { return basis.rows(); }
  std::vector<Vec<T>> vectors() const { return basis.row_list(); }
};

/// Echelonized span of the given vectors (rows).
template <class T>
Subspace<T> span(const std::vector<Vec<T>>& vectors, size_t ambient) {
  Matrix<T> m = Matrix<T>::from_rows(vectors, ambient);
  auto piv = rref_in_place(m);
  Matrix<T> b(piv.size(), ambient);
  for (size_t i = 0; i < piv.size(); ++i)
    for (size_t j = 0; j < ambient; ++j) b(i, j) = m(i, j);
  return Subspace<T>{ambient, std::move(b), std::move(piv)};
}

template <class T>
Subspace<T> full_space(size_t n) {
  return Subspace<T>{n, Matrix<T>::identity(n), [n] {
                       std::vector<size_t> p(n);
                       for (size_t i = 0; i < n; ++i) p[i] = i;
                       return p;
                     }()};
}

/// Right kernel {v : m v = 0} as a reduced-echelon basis.
template <class T>
Subspace<T> kernel(const Matrix<T>& m) {
  Matrix<T> r = m;
  auto piv = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<Vec<T>> vecs;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    vecs.push_back(std::move(v));
  }
  return span(vecs, m.cols());
}

template <class T>
bool contains(const Subspace<T>& s, const Vec<T>& v);

/// Coordinates of v in the echelon basis of s; throws if v is not in s.
template <class T>
Vec<T> coordinates(const Subspace<T>& s, const Vec<T>& v) {
  Vec<T> coords(s.dim(), T(0));
  Vec<T> rem = v;
  for (size_t i = 0; i < s.dim(); ++i) {
    const T c = rem[s.pivots[i]];
    coords[i] = c;
    if (is_zero(c)) continue;
    for (size_t j = 0; j < s.ambient; ++j)
      if (!is_zero(s.basis(i, j))) rem[j] = rem[j] - c * s.basis(i, j);
  }
  for (const auto& x : rem)
    if (!is_zero(x)) throw DomainError("coordinates: vector not in subspace");
  return coords;
}

template <class T>
bool contains(const Subspace<T>& s, const Vec<T>& v) {
  Vec<T> rem = v;
  for (size_t i = 0; i < s.dim(); ++i) {
    const T c = rem[s.pivots[i]];
    if (is_zero(c)) continue;
    for (size_t j = 0; j < s.ambient; ++j)
      if (!is_zero(s.basis(i, j))) rem[j] = rem[j] - c * s.basis(i, j);
  }
  for (const auto& x : rem)
    if (!is_zero(x)) return false;
  return true;
}

template <class T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient != b.ambient) throw UsageError("sum: ambient dimension mismatch");
  auto rows = a.vectors();
  for (auto& v : b.vectors()) rows.push_back(v);
  return span(rows, a.ambient);
}

/// Intersection of two subspaces, reduced echelon.
template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient != b.ambient) throw UsageError("intersect_subspaces: ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return span<T>({}, a.ambient);
  // Solve x A = y B, i.e. [A; -B]^T [x; y] = 0.
  size_t da = a.dim(), db = b.dim(), n = a.ambient;
  Matrix<T> m(n, da + db);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < n; ++j) m(j, i) = a.basis(i, j);
  for (size_t i = 0; i < db; ++i)
    for (size_t j = 0; j < n; ++j) m(j, da + i) = -b.basis(i, j);
  Subspace<T> k = kernel(m);
  std::vector<Vec<T>> out;
  for (size_t r = 0; r < k.dim(); ++r) {
    Vec<T> v(n, T(0));
    for (size_t i = 0; i < da; ++i) {
      const T& c = k.basis(r, i);
      if (is_zero(c)) continue;
      for (size_t j = 0; j < n; ++j) v[j] = v[j] + c * a.basis(i, j);
    }
    out.push_back(std::move(v));
  }
  return span(out, n);
}

/// Image of each basis vector of s under m (column-vector convention) spanned.
template <class T>
Subspace<T> image(const Matrix<T>& m, const Subspace<T>& s) {
  std::vector<Vec<T>> out;
  for (auto& v : s.vectors()) out.push_back(m * v);
  return span(out, m.rows());
}

/// Matrix of m restricted to the invariant subspace s, in s's basis, using
/// column-vector convention: column j holds the coordinates of m * b_j.
template <class T>
Matrix<T> restrict_to(const Matrix<T>& m, const Subspace<T>& s) {
  Matrix<T> out(s.dim(), s.dim());
  for (size_t j = 0; j < s.dim(); ++j) {
    Vec<T> img = m * s.basis.row(j);
    Vec<T> c = coordinates(s, img);
    for (size_t i = 0; i < s.dim(); ++i) out(i, j) = c[i];
  }
  return out;
}

/// Restriction with respect to an arbitrary (not echelonized) basis list.
template <class T>
Matrix<T> restrict_to_basis(const Matrix<T>& m, const std::vector<Vec<T>>& basis) {
  size_t d = basis.size();
  if (d == 0) return Matrix<T>(0, 0);
  size_t n = basis[0].size();
  // Solve basis^T * c = image for each image.
  Matrix<T> aug(n, d + d);
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  for (size_t j = 0; j < d; ++j) {
    Vec<T> img = m * basis[j];
    for (size_t i = 0; i < n; ++i) aug(i, d + j) = img[i];
  }
  auto piv = rref_in_place(aug);
  if (piv.size() != d) throw DomainError("restrict_to_basis: basis dependent or not invariant");
  for (size_t c : piv)
    if (c >= d) throw DomainError("restrict_to_basis: subspace not invariant");
  for (size_t i = d; i < n; ++i)
    for (size_t j = d; j < 2 * d; ++j)
      if (!is_zero(aug(i, j))) throw DomainError("restrict_to_basis: subspace not invariant");
  Matrix<T> out(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) out(i, j) = aug(i, d + j);
  return out;
}

/// Inverse of a square matrix; throws DomainError when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw UsageError("inverse: matrix not square");
  size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref_in_place(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw DomainError("inverse: singular matrix");
  Matrix<T> out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Coordinates of v with respect to an arbitrary basis list (throws if outside).
template <class T>
Vec<T> coordinates_in_basis(const std::vector<Vec<T>>& basis, const Vec<T>& v) {
  size_t d = basis.size(), n = v.size();
  Matrix<T> aug(n, d + 1);
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  for (size_t i = 0; i < n; ++i) aug(i, d) = v[i];
  auto piv = rref_in_place(aug);
  for (size_t c : piv)
    if (c == d) throw DomainError("coordinates_in_basis: vector outside span");
  if (piv.size() != d) throw DomainError("coordinates_in_basis: basis dependent");
  Vec<T> out(d, T(0));
  for (size_t i = 0; i < d; ++i) out[i] = aug(i, d);
  return out;
}

/// Characteristic polynomial det(x I - m) via Hessenberg reduction.
template <class T>
Poly<T> charpoly(const Matrix<T>& m) {
  if (!m.is_square()) throw UsageError("charpoly: matrix not square");
  size_t n = m.rows();
  Matrix<T> h = m;
  for (size_t j = 0; j + 2 <= n; ++j) {
    size_t piv = j + 1;
    while (piv < n && is_zero(h(piv, j))) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    T inv = T(1) / h(j + 1, j);
    for (size_t i = j + 2; i < n; ++i) {
      if (is_zero(h(i, j))) continue;
      T f = h(i, j) * inv;
      for (size_t c = 0; c < n; ++c) h(i, c) = h(i, c) - f * h(j + 1, c);
      for (size_t r = 0; r < n; ++r) h(r, j + 1) = h(r, j + 1) + f * h(r, i);
    }
  }
  std::vector<Poly<T>> p(n + 1);
  p[0] = Poly<T>(T(1));
  Poly<T> x = Poly<T>::x();
  for (size_t k = 1; k <= n; ++k) {
    p[k] = (x - Poly<T>(h(k - 1, k - 1))) * p[k - 1];
    T prod(1);
    for (size_t i = 1; i < k; ++i) {
      prod = prod * h(k - i, k - i - 1);
      if (is_zero(prod)) break;
      T coeff = prod * h(k - i - 1, k - 1);
      p[k] = p[k] - Poly<T>(coeff) * p[k - i - 1];
    }
  }
  return p[n];
}

/// Polynomial evaluated at a square matrix (Horner).
template <class T>
Matrix<T> evaluate(const Poly<T>& p, const Matrix<T>& m) {
  Matrix<T> acc(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + p.coeff(i) * Matrix<T>::identity(m.rows());
  return acc;
}

/// Minimal polynomial: lcm over the standard basis of the Krylov minimal polynomials.
template <class T>
Poly<T> minpoly(const Matrix<T>& m) {
  if (!m.is_square()) throw UsageError("min_poly_of_matrix: matrix not square");
  size_t n = m.rows();
  Poly<T> result(T(1));
  for (size_t e = 0; e < n; ++e) {
    // Skip vectors already annihilated by the running result.
    Vec<T> v(n, T(0));
    v[e] = T(1);
    Vec<T> reduced = evaluate(result, m) * v;
    bool zero = true;
    for (auto& x : reduced)
      if (!is_zero(x)) zero = false;
    if (zero) continue;
    // Krylov sequence of the reduced vector.
    std::vector<Vec<T>> krylov{reduced};
    Poly<T> local;
    while (true) {
      Vec<T> next = m * krylov.back();
      // Solve next = sum c_i krylov_i.
      try {
        Vec<T> c = coordinates_in_basis(krylov, next);
        std::vector<T> coeffs(krylov.size() + 1, T(0));
        for (size_t i = 0; i < c.size(); ++i) coeffs[i] = -c[i];
        coeffs.back() = T(1);
        local = Poly<T>(std::move(coeffs));
        break;
      } catch (const DomainError&) {
        krylov.push_back(std::move(next));
      }
    }
    result = result * local;
  }
  return result.monic();
}

/// Basis of {X : X A_i = B_i X for all i}, each X flattened row-major, reduced echelon.
template <class T>
std::vector<Matrix<T>> solve_intertwiners(const std::vector<std::pair<Matrix<T>, Matrix<T>>>& pairs) {
  if (pairs.empty()) throw UsageError("solve_intertwiners: no pairs");
  size_t d = pairs[0].first.rows();
  for (const auto& [a, b] : pairs)
    if (!a.is_square() || !b.is_square() || a.rows() != d || b.rows() != d)
      throw UsageError("solve_intertwiners: size mismatch");
  size_t unknowns = d * d;
  Matrix<T> sys(pairs.size() * unknowns, unknowns);
  size_t row = 0;
  for (const auto& [a, b] : pairs) {
    // (X A - B X)_{ij} = sum_k X_ik A_kj - sum_k B_ik X_kj.
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j, ++row) {
        for (size_t k = 0; k < d; ++k) {
          sys(row, i * d + k) = sys(row, i * d + k) + a(k, j);
          sys(row, k * d + j) = sys(row, k * d + j) - b(i, k);
        }
      }
  }
  Subspace<T> ker = kernel(sys);
  std::vector<Matrix<T>> out;
  for (size_t r = 0; r < ker.dim(); ++r) out.emplace_back(d, d, ker.basis.row(r));
  return out;
}

}  // namespace lcomp
