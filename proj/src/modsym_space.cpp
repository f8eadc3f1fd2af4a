#include <algorithm>
#include <map>

#include "lcomp/modsym.hpp"

namespace lcomp {

namespace {

// Union-find over Manin generators with x_a = sign * x_parent; a root may be
// forced to zero by an inconsistent cycle.
struct SignedUnionFind {
  std::vector<size_t> parent;
  std::vector<int> sign;
  std::vector<char> zero;

  explicit SignedUnionFind(size_t n) : parent(n), sign(n, 1), zero(n, 0) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<size_t, int> find(size_t a) {
    int s = 1;
    size_t r = a;
    while (parent[r] != r) {
      s *= sign[r];
      r = parent[r];
    }
    // Path compression keeping signs.
    int t = s;
    while (parent[a] != a) {
      size_t next = parent[a];
      int sa = sign[a];
      parent[a] = r;
      sign[a] = t;
      t *= sa;
      a = next;
    }
    return {r, s};
  }

  // Impose x_a = s * x_b.
  void relate(size_t a, size_t b, int s) {
    auto [ra, sa] = find(a);
    auto [rb, sb] = find(b);
    if (ra == rb) {
      if (sa != s * sb) zero[ra] = 1;
      return;
    }
    // x_ra = sa * x_a = sa * s * sb * x_rb.
    parent[ra] = rb;
    sign[ra] = sa * s * sb;
    if (zero[ra]) zero[rb] = 1;
  }
};

int parity_sign(int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

ModularSymbolSpace::ModularSymbolSpace(GammaH group, int weight) : group_(std::move(group)), k_(weight), w_(weight - 2) {
  if (weight < 2) throw UsageError("ModularSymbolSpace: weight must be at least 2");
  build_classes();
  build_relations();
  build_boundary();
}

void ModularSymbolSpace::build_classes() {
  int64_t N = level();
  pair_class_.assign(static_cast<size_t>(N * N), -1);
  const auto& H = group_.elements();
  for (int64_t c = 0; c < N; ++c)
    for (int64_t d = 0; d < N; ++d) {
      if (gcd64(gcd64(c, d), N) != 1) continue;
      if (pair_class_[static_cast<size_t>(c * N + d)] >= 0) continue;
      int idx = static_cast<int>(class_reps_.size());
      class_reps_.push_back({c, d});
      for (int64_t h : H) pair_class_[static_cast<size_t>(pair_index(h * c, h * d))] = idx;
    }
}

void ModularSymbolSpace::build_relations() {
  const size_t m = static_cast<size_t>(w_ + 1);
  const size_t ngens = class_reps_.size() * m;
  auto gen = [m](size_t cls, size_t i) { return cls * m + i; };
  SignedUnionFind uf(ngens);

  for (size_t v = 0; v < class_reps_.size(); ++v) {
    auto [c, d] = class_reps_[v];
    size_t vs = static_cast<size_t>(class_of(d, -c));
    size_t vj = static_cast<size_t>(class_of(-c, -d));
    for (size_t i = 0; i < m; ++i) {
      // [X^i Y^(w-i), v] + (-1)^i [X^(w-i) Y^i, v sigma] = 0
      uf.relate(gen(v, i), gen(vs, m - 1 - i), -parity_sign(static_cast<int64_t>(i)));
      // [P, -v] = (-1)^w [P, v]
      uf.relate(gen(v, i), gen(vj, i), parity_sign(w_));
    }
  }

  std::vector<long> col_of(ngens, -1);
  std::vector<size_t> free_gens;
  for (size_t g = 0; g < ngens; ++g) {
    auto [r, s] = uf.find(g);
    (void)s;
    if (r == g && !uf.zero[g]) {
      col_of[g] = static_cast<long>(free_gens.size());
      free_gens.push_back(g);
    }
  }
  const size_t F = free_gens.size();

  // The three-term relations, written over the free generators.
  std::vector<QVec> rows;
  rows.reserve(ngens);
  HomPoly mono(m, Rational(0));
  auto accumulate = [&](QVec& row, size_t g, const Rational& coeff) {
    auto [r, s] = uf.find(g);
    if (uf.zero[r]) return;
    row[static_cast<size_t>(col_of[r])] += coeff * s;
  };
  for (size_t v = 0; v < class_reps_.size(); ++v) {
    auto [c, d] = class_reps_[v];
    size_t v1 = static_cast<size_t>(class_of(d, -c - d));
    size_t v2 = static_cast<size_t>(class_of(-c - d, c));
    for (size_t i = 0; i < m; ++i) {
      std::fill(mono.begin(), mono.end(), Rational(0));
      mono[i] = 1;
      QVec row(F, Rational(0));
      accumulate(row, gen(v, i), Rational(1));
      HomPoly t1 = substitute(mono, Rational(0), Rational(-1), Rational(1), Rational(-1));
      HomPoly t2 = substitute(mono, Rational(-1), Rational(1), Rational(-1), Rational(0));
      for (size_t j = 0; j < m; ++j) {
        if (!is_zero(t1[j])) accumulate(row, gen(v1, j), t1[j]);
        if (!is_zero(t2[j])) accumulate(row, gen(v2, j), t2[j]);
      }
      if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return !is_zero(x); }))
        rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  QMatrix R = QMatrix::from_rows(rows, F);
  auto piv = rref_in_place(R);
  std::vector<long> pivot_row(F, -1);
  for (size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = static_cast<long>(i);
  std::vector<long> basis_index(F, -1);
  for (size_t f = 0; f < F; ++f)
    if (pivot_row[f] < 0) {
      basis_index[f] = static_cast<long>(basis_gens_.size());
      basis_gens_.push_back(free_gens[f]);
    }

  // Each free generator as a combination of basis vectors.
  std::vector<std::vector<std::pair<size_t, Rational>>> free_expr(F);
  for (size_t f = 0; f < F; ++f) {
    if (pivot_row[f] < 0) {
      free_expr[f].push_back({static_cast<size_t>(basis_index[f]), Rational(1)});
      continue;
    }
    size_t r = static_cast<size_t>(pivot_row[f]);
    for (size_t j = f + 1; j < F; ++j)
      if (basis_index[j] >= 0 && !is_zero(R(r, j)))
        free_expr[f].push_back({static_cast<size_t>(basis_index[j]), -R(r, j)});
  }

  gen_to_basis_.assign(ngens, {});
  for (size_t g = 0; g < ngens; ++g) {
    auto [r, s] = uf.find(g);
    if (uf.zero[r]) continue;
    for (const auto& [idx, coeff] : free_expr[static_cast<size_t>(col_of[r])])
      gen_to_basis_[g].push_back({idx, coeff * s});
  }
}

void ModularSymbolSpace::build_boundary() {
  int64_t N = level();
  const auto& H = group_.elements();
  std::vector<int64_t> Hinv;
  for (int64_t h : H) Hinv.push_back(inverse_mod(h, N));

  auto key = [&](int64_t a, int64_t c) {
    std::pair<int64_t, int64_t> best{N, N};
    for (size_t t = 0; t < H.size(); ++t) {
      int64_t c2 = mod(H[t] * c, N);
      int64_t g = gcd64(c2, N);
      int64_t a2 = mod(Hinv[t] * mod(a, g), g);
      best = std::min(best, std::pair<int64_t, int64_t>{c2, a2});
    }
    return best;
  };

  std::map<std::pair<int64_t, int64_t>, size_t> cusp_index;
  std::vector<std::vector<std::pair<size_t, int>>> contributions(dim());
  // The boundary symbol of the cusp g(infinity) with first column (a, c).
  auto boundary_of = [&](size_t j, int64_t a, int64_t c, int sgn) {
    auto k1 = key(a, c), k2 = key(-a, -c);
    if (k1 == k2 && w_ % 2 != 0) return;
    auto canon = std::min(k1, k2);
    int orient = (k1 == canon) ? 1 : parity_sign(w_);
    auto it = cusp_index.find(canon);
    size_t idx;
    if (it == cusp_index.end()) {
      idx = cusp_index.size();
      cusp_index[canon] = idx;
    } else {
      idx = it->second;
    }
    contributions[j].push_back({idx, sgn * orient});
  };

  const size_t m = static_cast<size_t>(w_ + 1);
  for (size_t j = 0; j < dim(); ++j) {
    size_t g = basis_gens_[j];
    size_t i = g % m;
    auto [c, d] = class_reps_[g / m];
    if (i == m - 1) {
      int64_t gc = gcd64(c, N);
      int64_t a = gc == 1 ? 0 : inverse_mod(d, gc);
      boundary_of(j, a, c, 1);
    }
    if (i == 0) {
      int64_t gd = gcd64(d, N);
      int64_t b = gd == 1 ? 0 : mod(-inverse_mod(c, gd), gd);
      boundary_of(j, b, d, -1);
    }
  }
  boundary_ = QMatrix(cusp_index.size(), dim());
  for (size_t j = 0; j < dim(); ++j)
    for (auto [idx, s] : contributions[j]) boundary_(idx, j) += s;
  cuspidal_ = kernel(boundary_);
}

void ModularSymbolSpace::add_generator(QVec& out, size_t gen, const Rational& coeff) const {
  for (const auto& [idx, c] : gen_to_basis_[gen]) out[idx] += coeff * c;
}

QVec ModularSymbolSpace::manin_symbol(const HomPoly& P, int64_t c, int64_t d) const {
  QVec out(dim(), Rational(0));
  int cls = class_of(c, d);
  if (cls < 0) return out;
  const size_t m = static_cast<size_t>(w_ + 1);
  if (P.size() != m) throw UsageError("manin_symbol: polynomial has the wrong degree");
  for (size_t i = 0; i < m; ++i)
    if (!is_zero(P[i])) add_generator(out, static_cast<size_t>(cls) * m + i, P[i]);
  return out;
}

std::pair<HomPoly, Mat2> ModularSymbolSpace::basis_symbol(size_t j) const {
  const size_t m = static_cast<size_t>(w_ + 1);
  size_t g = basis_gens_.at(j);
  HomPoly P(m, Rational(0));
  P[g % m] = 1;
  auto [c0, d0] = class_reps_[g / m];
  // Lift (c0, d0) to a coprime integer pair, then complete to SL2(Z).
  int64_t N = level();
  int64_t c = c0 == 0 ? N : c0, d = d0;
  while (gcd64(c, d) != 1) d += N;
  int64_t x, y;
  xgcd64(d, c, x, y);  // x d + y c = 1, so [[x, -y], [c, d]] has determinant 1
  return {P, Mat2::of(x, -y, c, d)};
}

}  // namespace lcomp
