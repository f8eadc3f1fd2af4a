#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lcomp/matrix.hpp"
#include "lcomp/poly.hpp"
#include "lcomp/rational.hpp"

namespace lcomp {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[x]/(m(x)) for a monic irreducible m. Construct through NumberField::make.
class NumberField {
 public:
  /// Checks that `modulus` is monic and irreducible over Q.
  static FieldPtr make(const QPoly& modulus, std::string var = "a");
  /// No irreducibility check; for callers that already factored.
  static FieldPtr make_trusted(const QPoly& modulus, std::string var = "a");

  const QPoly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  const std::string& var() const { return var_; }

  /// Reduces a polynomial to power-basis coordinates of length degree().
  std::vector<Rational> reduce(const QPoly& p) const;

 private:
  NumberField(QPoly modulus, std::string var);
  QPoly modulus_;
  std::string var_;
  std::vector<std::vector<Rational>> power_table_;  // x^j mod m, j in [deg, 2 deg - 2]
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a number field in the power basis. A null field pointer marks a
/// plain rational, which mixes freely with elements of any field.
class NfElem {
 public:
  NfElem() : coords_{Rational(0)} {}
  NfElem(long v) : coords_{Rational(v)} {}              // NOLINT(google-explicit-constructor)
  NfElem(const Rational& v) : coords_{v} {}             // NOLINT(google-explicit-constructor)
  NfElem(FieldPtr field, std::vector<Rational> coords);

  static NfElem generator(const FieldPtr& field);
  static NfElem from_poly(const FieldPtr& field, const QPoly& p);

  const FieldPtr& field() const { return field_; }
  bool is_rational() const;
  /// Rational value; throws DomainError if the element is irrational.
  Rational to_rational() const;
  /// Coordinates padded to the field degree (length 1 for a plain rational).
  std::vector<Rational> coords() const;
  QPoly as_poly() const;
  /// The same value viewed in `field` (only valid for rationals or same field).
  NfElem in_field(const FieldPtr& field) const;

  bool is_zero() const;
  NfElem inverse() const;
  NfElem pow(long e) const;
  /// Matrix of multiplication by this element on the power basis.
  Matrix<Rational> multiplication_matrix() const;
  QPoly minpoly() const;
  QPoly charpoly() const;
  Rational trace() const;
  Rational norm() const;

  std::string to_string() const;

  friend NfElem operator+(const NfElem& a, const NfElem& b);
  friend NfElem operator-(const NfElem& a, const NfElem& b);
  friend NfElem operator*(const NfElem& a, const NfElem& b);
  friend NfElem operator/(const NfElem& a, const NfElem& b);
  friend NfElem operator-(const NfElem& a);
  friend bool operator==(const NfElem& a, const NfElem& b);
  friend bool operator!=(const NfElem& a, const NfElem& b) { return !(a == b); }
  NfElem& operator+=(const NfElem& o) { return *this = *this + o; }
  NfElem& operator-=(const NfElem& o) { return *this = *this - o; }
  NfElem& operator*=(const NfElem& o) { return *this = *this * o; }

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Rational> coords_;  // trimmed of trailing zeros, never empty
};

inline bool is_zero(const NfElem& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const NfElem& x);

using NfPoly = Poly<NfElem>;
using NfMatrix = Matrix<NfElem>;
using NfVec = Vec<NfElem>;

/// Field of the operands; all non-null fields must agree.
FieldPtr common_field(const std::vector<NfElem>& xs);

NfMatrix to_nf(const Matrix<Rational>& m);
NfVec to_nf(const Vec<Rational>& v);
NfPoly to_nf(const QPoly& p);

/// Rational matrix times field vector without converting the matrix.
NfVec apply(const Matrix<Rational>& m, const NfVec& v);

/// Images of an element under a field embedding given by the image of the generator.
NfElem embed(const NfElem& x, const NfElem& generator_image);

}  // namespace lcomp
