#include <algorithm>

#include "lcomp/factor.hpp"

namespace lcomp {

namespace {

QPoly to_rational_poly(const NfPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.to_rational());
  return QPoly(std::move(c));
}

NfPoly in_field(const NfPoly& p, const FieldPtr& f) {
  std::vector<NfElem> c;
  for (const auto& x : p.coeffs()) c.push_back(x.in_field(f));
  return NfPoly(std::move(c));
}

NfFactorization squarefree_nf(const NfPoly& p) {
  NfFactorization out;
  NfPoly f = p.monic();
  NfPoly a0 = poly_gcd(f, f.derivative());
  NfPoly b = f / a0;
  NfPoly c = f.derivative() / a0;
  NfPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    NfPoly a = poly_gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

/// Matrix over Q of multiplication by (x + s*theta) on F[x]/(g), basis theta^i x^j.
Matrix<Rational> shifted_multiplication(const NfPoly& g, const FieldPtr& f, long s) {
  int n = f->degree(), d = g.degree();
  Matrix<Rational> m(static_cast<size_t>(n * d), static_cast<size_t>(n * d));
  NfElem theta = NfElem::generator(f);
  NfPoly beta({theta * NfElem(s), NfElem(1)});
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) {
      NfPoly basis = NfPoly::monomial(theta.pow(i), j);
      NfPoly img = (beta * basis) % g;
      for (int jj = 0; jj < d; ++jj) {
        auto c = img.coeff(jj).coords();
        c.resize(n, Rational(0));
        for (int ii = 0; ii < n; ++ii) m(static_cast<size_t>(jj * n + ii), static_cast<size_t>(j * n + i)) = c[ii];
      }
    }
  return m;
}

long shift_value(int k) { return (k % 2) ? (k + 1) / 2 : -(k / 2); }

/// Finds s with Norm(g(x - s theta)) square-free; returns that norm.
QPoly squarefree_norm(const NfPoly& g, const FieldPtr& f, long& s) {
  for (int k = 0; k < 200; ++k) {
    s = shift_value(k);
    QPoly norm = charpoly(shifted_multiplication(g, f, s));
    if (poly_gcd(norm, norm.derivative()).degree() == 0) return norm;
  }
  throw ConsistencyError("squarefree_norm: no suitable shift found");
}

NfPoly substitute_shift(const QPoly& q, const FieldPtr& f, long s) {
  // q(x + s theta) with coefficients in f.
  NfPoly shift({NfElem::generator(f) * NfElem(s), NfElem(1)});
  return in_field(to_nf(q).compose(shift), f);
}

bool coords_less(const NfElem& a, const NfElem& b) {
  auto ca = a.coords(), cb = b.coords();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  for (size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

bool nfpoly_less(const NfPoly& a, const NfPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return coords_less(a.coeff(i), b.coeff(i));
  return false;
}

}  // namespace

NfFactorization factor_over_field(const NfPoly& p, const FieldPtr& field) {
  if (p.is_zero_poly()) throw DomainError("factor_over_field: zero polynomial");
  NfFactorization out;
  if (!field || field->degree() == 1) {
    // Coefficients are rational (a degree-one field is Q in disguise).
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.coords()[0]);
    for (auto& [q, e] : factor_rational_poly(QPoly(std::move(c)))) out.emplace_back(in_field(to_nf(q), field), e);
    return out;
  }
  NfPoly pf = in_field(p, field);
  for (auto& [g, mult] : squarefree_nf(pf)) {
    if (g.degree() == 1) {
      out.emplace_back(g, mult);
      continue;
    }
    long s = 0;
    QPoly norm = squarefree_norm(g, field, s);
    auto rat = factor_rational_poly(norm);
    if (rat.size() == 1) {
      out.emplace_back(g, mult);
      continue;
    }
    for (auto& [ni, e] : rat) {
      NfPoly h = poly_gcd(g, substitute_shift(ni, field, s));
      if (h.degree() > 0) out.emplace_back(h.monic(), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return nfpoly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

std::vector<NfElem> roots_in_field(const NfPoly& p, const FieldPtr& field) {
  std::vector<NfElem> roots;
  for (auto& [h, e] : factor_over_field(p, field))
    if (h.degree() == 1) roots.push_back((-h.coeff(0)).in_field(field));
  std::sort(roots.begin(), roots.end(), coords_less);
  return roots;
}

std::vector<NfElem> roots_in_field(const QPoly& p, const FieldPtr& field) {
  return roots_in_field(to_nf(p), field);
}

Extension adjoin_root(const FieldPtr& base, const NfPoly& h, const std::string& var) {
  if (h.degree() < 1) throw UsageError("adjoin_root: constant polynomial");
  NfPoly hm = h.monic();
  if (hm.degree() == 1) {
    NfElem gen = base ? NfElem::generator(base) : NfElem(0);
    return Extension{base, gen, (-hm.coeff(0)).in_field(base)};
  }
  if (!base || base->degree() == 1) {
    FieldPtr f = NumberField::make(to_rational_poly(hm), var);
    NfElem bg = base ? NfElem(NfElem::generator(base).to_rational()) : NfElem(0);
    return Extension{f, bg.in_field(f), NfElem::generator(f)};
  }
  long s = 0;
  QPoly norm = squarefree_norm(hm, base, s);
  if (!is_irreducible(norm)) throw DomainError("adjoin_root: polynomial is reducible over the base field");
  FieldPtr f = NumberField::make_trusted(norm, var);
  NfElem z = NfElem::generator(f);
  // theta is the common root t of m(t) and h(z - s t).
  NfPoly m_t = in_field(to_nf(base->modulus()), f);
  NfPoly lin({z, NfElem(-s)});  // z - s t
  NfPoly big;
  NfPoly power(NfElem(1).in_field(f));
  for (int j = 0; j <= hm.degree(); ++j) {
    QPoly cj = hm.coeff(j).as_poly();
    NfPoly cj_t = in_field(to_nf(cj), f);
    big = big + cj_t * power;
    power = power * lin;
  }
  NfPoly g = poly_gcd(m_t, big);
  if (g.degree() != 1) throw ConsistencyError("adjoin_root: could not express the base generator");
  NfElem theta = (-g.coeff(0)).in_field(f);
  NfElem y = z - NfElem(s) * theta;
  return Extension{f, theta, y};
}

Extension adjoin_rational_root(const FieldPtr& base, const QPoly& q, const std::string& var) {
  auto fac = factor_over_field(to_nf(q), base);
  if (fac.empty()) throw DomainError("adjoin_rational_root: constant polynomial");
  for (auto& [h, e] : fac)
    if (h.degree() == 1) return adjoin_root(base, h, var);
  return adjoin_root(base, fac.front().first, var);
}

}  // namespace lcomp
