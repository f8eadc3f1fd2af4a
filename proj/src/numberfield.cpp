#include "lcomp/numberfield.hpp"

#include <ostream>

#include "lcomp/factor.hpp"

namespace lcomp {

NumberField::NumberField(QPoly modulus, std::string var) : modulus_(std::move(modulus)), var_(std::move(var)) {
  int d = modulus_.degree();
  // x^d = -sum m_i x^i; build x^j mod m for d <= j <= 2d-2 incrementally.
  std::vector<Rational> cur(d, Rational(0));
  for (int i = 0; i < d; ++i) cur[i] = -modulus_.coeff(i);
  for (int j = d; j <= 2 * d - 2; ++j) {
    power_table_.push_back(cur);
    std::vector<Rational> next(d, Rational(0));
    const Rational top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    for (int i = 0; i < d; ++i)
      if (!is_zero(top)) next[i] -= top * modulus_.coeff(i);
    cur = std::move(next);
  }
}

FieldPtr NumberField::make_trusted(const QPoly& modulus, std::string var) {
  if (modulus.degree() < 1) throw DomainError("number field modulus must have positive degree");
  if (modulus.leading() != 1) throw DomainError("number field modulus must be monic");
  return FieldPtr(new NumberField(modulus, std::move(var)));
}

FieldPtr NumberField::make(const QPoly& modulus, std::string var) {
  if (!is_irreducible(modulus)) throw DomainError("number field modulus " + modulus.to_string() + " is reducible");
  return make_trusted(modulus, std::move(var));
}

std::vector<Rational> NumberField::reduce(const QPoly& p) const {
  int d = degree();
  std::vector<Rational> out(d, Rational(0));
  const auto& c = p.coeffs();
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (is_zero(c[i])) continue;
    if (i < d) {
      out[i] += c[i];
    } else if (i <= 2 * d - 2) {
      const auto& row = power_table_[i - d];
      for (int j = 0; j < d; ++j)
        if (!is_zero(row[j])) out[j] += c[i] * row[j];
    } else {
      auto r = (p % modulus_);
      std::vector<Rational> o2(d, Rational(0));
      for (int j = 0; j <= r.degree(); ++j) o2[j] = r.coeff(j);
      return o2;
    }
  }
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->modulus() == b->modulus();
}

NfElem::NfElem(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (field_ && static_cast<int>(coords_.size()) > field_->degree())
    throw UsageError("NfElem: too many coordinates");
  if (coords_.empty()) coords_.push_back(Rational(0));
  for (auto& c : coords_) c.canonicalize();
  normalize();
}

void NfElem::normalize() {
  while (coords_.size() > 1 && lcomp::is_zero(coords_.back())) coords_.pop_back();
  if (!field_ && coords_.size() > 1) throw UsageError("NfElem: irrational value without a field");
}

NfElem NfElem::generator(const FieldPtr& field) {
  if (field->degree() == 1) return NfElem(field, {-field->modulus().coeff(0)});
  return NfElem(field, {Rational(0), Rational(1)});
}

NfElem NfElem::from_poly(const FieldPtr& field, const QPoly& p) {
  if (!field) {
    if (p.degree() > 0) throw UsageError("NfElem::from_poly: polynomial needs a field");
    return NfElem(p.coeff(0));
  }
  return NfElem(field, field->reduce(p));
}

bool NfElem::is_rational() const { return coords_.size() == 1; }

Rational NfElem::to_rational() const {
  if (!is_rational()) throw DomainError("field element " + to_string() + " is not rational");
  return coords_[0];
}

std::vector<Rational> NfElem::coords() const {
  std::vector<Rational> c = coords_;
  c.resize(field_ ? field_->degree() : 1, Rational(0));
  return c;
}

QPoly NfElem::as_poly() const { return QPoly(coords_); }

NfElem NfElem::in_field(const FieldPtr& field) const {
  if (field_ && !same_field(field_, field)) throw UsageError("NfElem::in_field: incompatible fields");
  return NfElem(field, coords_);
}

bool NfElem::is_zero() const { return coords_.size() == 1 && lcomp::is_zero(coords_[0]); }

static FieldPtr pick_field(const NfElem& a, const NfElem& b) {
  if (!a.field()) return b.field();
  if (!b.field()) return a.field();
  if (!same_field(a.field(), b.field())) throw UsageError("arithmetic between elements of different number fields");
  return a.field();
}

NfElem operator+(const NfElem& a, const NfElem& b) {
  FieldPtr f = pick_field(a, b);
  std::vector<Rational> c(std::max(a.coords_.size(), b.coords_.size()), Rational(0));
  for (size_t i = 0; i < a.coords_.size(); ++i) c[i] += a.coords_[i];
  for (size_t i = 0; i < b.coords_.size(); ++i) c[i] += b.coords_[i];
  return NfElem(f, std::move(c));
}

NfElem operator-(const NfElem& a) {
  std::vector<Rational> c = a.coords_;
  for (auto& x : c) x = -x;
  return NfElem(a.field_, std::move(c));
}

NfElem operator-(const NfElem& a, const NfElem& b) {
  FieldPtr f = pick_field(a, b);
  std::vector<Rational> c(std::max(a.coords_.size(), b.coords_.size()), Rational(0));
  for (size_t i = 0; i < a.coords_.size(); ++i) c[i] += a.coords_[i];
  for (size_t i = 0; i < b.coords_.size(); ++i) c[i] -= b.coords_[i];
  return NfElem(f, std::move(c));
}

NfElem operator*(const NfElem& a, const NfElem& b) {
  if (a.is_rational()) {
    std::vector<Rational> c = b.coords_;
    for (auto& x : c) x *= a.coords_[0];
    return NfElem(pick_field(a, b), std::move(c));
  }
  if (b.is_rational()) {
    std::vector<Rational> c = a.coords_;
    for (auto& x : c) x *= b.coords_[0];
    return NfElem(pick_field(a, b), std::move(c));
  }
  FieldPtr f = pick_field(a, b);
  std::vector<Rational> prod(a.coords_.size() + b.coords_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coords_.size(); ++i) {
    if (lcomp::is_zero(a.coords_[i])) continue;
    for (size_t j = 0; j < b.coords_.size(); ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  return NfElem(f, f->reduce(QPoly(std::move(prod))));
}

NfElem NfElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero field element");
  if (is_rational()) return NfElem(field_, {1 / coords_[0]});
  QPoly s, t;
  QPoly g = poly_xgcd(as_poly(), field_->modulus(), s, t);
  if (g.degree() != 0) throw DomainError("field element not invertible (modulus reducible?)");
  return from_poly(field_, s);
}

NfElem operator/(const NfElem& a, const NfElem& b) { return a * b.inverse(); }

bool operator==(const NfElem& a, const NfElem& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  if (a.coords_.size() > 1 && !same_field(a.field_, b.field_)) return false;
  for (size_t i = 0; i < a.coords_.size(); ++i)
    if (a.coords_[i] != b.coords_[i]) return false;
  return true;
}

NfElem NfElem::pow(long e) const {
  NfElem base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  NfElem result = NfElem(field_, {Rational(1)});
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Matrix<Rational> NfElem::multiplication_matrix() const {
  int d = field_ ? field_->degree() : 1;
  Matrix<Rational> m(d, d);
  NfElem basis = NfElem(field_, {Rational(1)});
  NfElem x = field_ ? generator(field_) : NfElem(1);
  for (int j = 0; j < d; ++j) {
    auto c = (*this * basis).coords();
    for (int i = 0; i < d; ++i) m(i, j) = c[i];
    basis = basis * x;
  }
  return m;
}

QPoly NfElem::charpoly() const { return lcomp::charpoly(multiplication_matrix()); }
QPoly NfElem::minpoly() const { return lcomp::minpoly(multiplication_matrix()); }
Rational NfElem::trace() const { return multiplication_matrix().trace(); }

Rational NfElem::norm() const {
  QPoly c = charpoly();
  Rational n = c.coeff(0);
  return (c.degree() % 2) ? Rational(-n) : n;
}

std::string NfElem::to_string() const {
  if (is_rational()) return coords_[0].get_str();
  return as_poly().to_string(field_->var());
}

std::ostream& operator<<(std::ostream& os, const NfElem& x) { return os << x.to_string(); }

FieldPtr common_field(const std::vector<NfElem>& xs) {
  FieldPtr f;
  for (const auto& x : xs) {
    if (!x.field()) continue;
    if (!f) f = x.field();
    else if (!same_field(f, x.field())) throw UsageError("common_field: incompatible fields");
  }
  return f;
}

NfMatrix to_nf(const Matrix<Rational>& m) {
  return m.map<NfElem>([](const Rational& r) { return NfElem(r); });
}

NfVec to_nf(const Vec<Rational>& v) {
  NfVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

NfPoly to_nf(const QPoly& p) {
  std::vector<NfElem> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return NfPoly(std::move(c));
}

NfVec apply(const Matrix<Rational>& m, const NfVec& v) {
  if (m.cols() != v.size()) throw UsageError("apply: shape mismatch");
  FieldPtr f = common_field(v);
  size_t d = f ? f->degree() : 1;
  // Work coordinate-wise: m acts on each power-basis slice independently.
  std::vector<std::vector<Rational>> slices(d, std::vector<Rational>(v.size(), Rational(0)));
  for (size_t j = 0; j < v.size(); ++j) {
    auto c = v[j].coords();
    for (size_t s = 0; s < c.size(); ++s) slices[s][j] = c[s];
  }
  NfVec out(m.rows());
  std::vector<Rational> acc(d);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (auto& a : acc) a = 0;
    for (size_t j = 0; j < m.cols(); ++j) {
      const Rational& mij = m(i, j);
      if (lcomp::is_zero(mij)) continue;
      for (size_t s = 0; s < d; ++s)
        if (!lcomp::is_zero(slices[s][j])) acc[s] += mij * slices[s][j];
    }
    out[i] = NfElem(f, acc);
  }
  return out;
}

NfElem embed(const NfElem& x, const NfElem& generator_image) {
  if (x.is_rational()) return NfElem(x.to_rational());
  NfElem acc(0);
  auto c = x.coords();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * generator_image + NfElem(*it);
  return acc;
}

}  // namespace lcomp
