#include "lcomp/dirichlet.hpp"

#include <numeric>
#include <sstream>

#include "lcomp/factor.hpp"

namespace lcomp {

namespace {

std::vector<std::pair<int64_t, int>> factorize(int64_t m) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

int64_t crt(int64_t a, int64_t m1, int64_t b, int64_t m2) {
  // x = a mod m1, x = b mod m2, gcd(m1, m2) = 1.
  if (m1 == 1) return mod(b, m2);
  if (m2 == 1) return mod(a, m1);
  int64_t t = mod((b - a) % m2 * inverse_mod(m1 % m2, m2), m2);
  return mod(a + m1 * t, m1 * m2);
}

int64_t primitive_root_prime_power(int64_t q, int e) {
  auto fs = factorize(q - 1);
  for (int64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto& [f, _] : fs)
      if (power_mod(g, (q - 1) / f, q) == 1) ok = false;
    if (!ok) continue;
    if (e >= 2 && power_mod(g, q - 1, q * q) == 1) g += q;
    return g;
  }
  return 1;  // q = 2
}

}  // namespace

UnitGroup UnitGroup::of(int64_t modulus) {
  if (modulus < 1) throw UsageError("UnitGroup: modulus must be positive");
  UnitGroup g;
  g.modulus = modulus;
  for (auto& [q, e] : factorize(modulus)) {
    int64_t qe = ipow(q, e), rest = modulus / qe;
    auto add = [&](int64_t gen, int64_t order) {
      g.gens.push_back(crt(mod(gen, qe), qe, 1, rest));
      g.orders.push_back(order);
    };
    if (q == 2) {
      if (e == 2) add(-1, 2);
      if (e >= 3) {
        add(-1, 2);
        add(5, qe / 4);
      }
    } else {
      add(primitive_root_prime_power(q, e), qe / q * (q - 1));
    }
  }
  return g;
}

int64_t UnitGroup::order() const {
  int64_t o = 1;
  for (auto n : orders) o *= n;
  return o;
}

std::vector<int64_t> UnitGroup::log(int64_t u) const {
  u = mod(u, modulus);
  if (gcd64(u, modulus) != 1) throw UsageError("UnitGroup::log: not a unit");
  // Enumerate exponent tuples; the groups involved are small.
  std::vector<int64_t> k(gens.size(), 0);
  while (true) {
    int64_t x = 1 % modulus;
    for (size_t i = 0; i < gens.size(); ++i) x = static_cast<int64_t>((__int128)x * power_mod(gens[i], k[i], modulus) % modulus);
    if (x == u) return k;
    size_t i = 0;
    while (i < k.size() && ++k[i] == orders[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  throw ConsistencyError("UnitGroup::log: generators do not generate");
}

std::vector<int64_t> UnitGroup::units() const {
  std::vector<int64_t> out;
  for (int64_t u = 0; u < modulus; ++u)
    if (gcd64(u, modulus) == 1) out.push_back(u);
  if (modulus == 1) out = {0};
  return out;
}

RootOfUnity RootOfUnity::make(int64_t order, int64_t exponent) {
  if (order < 1) throw UsageError("RootOfUnity: order must be positive");
  exponent = mod(exponent, order);
  int64_t g = gcd64(exponent, order);
  if (exponent == 0) return RootOfUnity{1, 0};
  return RootOfUnity{order / g, exponent / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  int64_t l = order / gcd64(order, o.order) * o.order;
  return make(l, exponent * (l / order) + o.exponent * (l / o.order));
}

std::string RootOfUnity::to_string() const {
  if (order == 1) return "1";
  if (order == 2) return "-1";
  return "zeta" + std::to_string(order) + "^" + std::to_string(exponent);
}

DirichletCharacter::DirichletCharacter(int64_t modulus) : modulus_(modulus), group_(UnitGroup::of(modulus)) {
  k_.assign(group_.gens.size(), 0);
  finish();
}

DirichletCharacter DirichletCharacter::from_generator_exponents(int64_t modulus, const std::vector<int64_t>& k) {
  DirichletCharacter c(modulus);
  if (k.size() != c.group_.gens.size()) throw UsageError("character: wrong number of generator exponents");
  for (size_t i = 0; i < k.size(); ++i) c.k_[i] = mod(k[i], c.group_.orders[i]);
  c.finish();
  return c;
}

void DirichletCharacter::finish() {
  order_ = 1;
  for (size_t i = 0; i < k_.size(); ++i) {
    RootOfUnity v = RootOfUnity::make(group_.orders[i], k_[i]);
    order_ = order_ / gcd64(order_, v.order) * v.order;
  }
  table_.assign(static_cast<size_t>(modulus_), -1);
  std::vector<int64_t> e(group_.gens.size(), 0);
  while (true) {
    int64_t x = 1 % modulus_, val = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      x = static_cast<int64_t>((__int128)x * power_mod(group_.gens[i], e[i], modulus_) % modulus_);
      // chi(g_i) = zeta_{n_i}^{k_i} = zeta_order^{k_i order / n_i}, exact since the
      // reduced denominator of k_i / n_i divides order.
      val = mod(val + e[i] * ((order_ * k_[i]) / group_.orders[i]), order_);
    }
    table_[static_cast<size_t>(x)] = val;
    size_t i = 0;
    while (i < e.size() && ++e[i] == group_.orders[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
}

DirichletCharacter DirichletCharacter::from_values(int64_t modulus,
                                                   const std::vector<std::pair<int64_t, RootOfUnity>>& values) {
  UnitGroup g = UnitGroup::of(modulus);
  std::vector<int64_t> k(g.gens.size(), 0);
  while (true) {
    DirichletCharacter c = from_generator_exponents(modulus, k);
    bool ok = true;
    for (auto& [u, v] : values)
      if (!(c(u) == v)) ok = false;
    if (ok) return c;
    size_t i = 0;
    while (i < k.size() && ++k[i] == g.orders[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  throw DomainError("no Dirichlet character modulo " + std::to_string(modulus) + " has the given values");
}

RootOfUnity DirichletCharacter::operator()(int64_t u) const {
  int64_t r = mod(u, modulus_);
  int64_t v = table_[static_cast<size_t>(r)];
  if (v < 0) throw UsageError("character evaluated at a non-unit");
  return RootOfUnity::make(order_, v);
}

NfElem DirichletCharacter::value(int64_t u, const NfElem& z, int64_t n) const {
  if (!is_unit(u)) return NfElem(0);
  RootOfUnity r = (*this)(u);
  if (n % r.order) throw UsageError("character value needs a root of unity of order " + std::to_string(r.order));
  return z.pow((n / r.order) * r.exponent);
}

int DirichletCharacter::parity() const {
  if (modulus_ <= 2) return 1;
  return (*this)(-1).is_one() ? 1 : -1;
}

int64_t DirichletCharacter::conductor() const {
  for (int64_t d = 1; d <= modulus_; ++d) {
    if (modulus_ % d) continue;
    bool ok = true;
    for (int64_t u = 1; u < modulus_ && ok; u += d)
      if (is_unit(u) && !(*this)(u).is_one()) ok = false;
    if (ok) return d;
  }
  return modulus_;
}

DirichletCharacter DirichletCharacter::restrict_to(int64_t d) const {
  if (modulus_ % d) throw UsageError("restrict_to: not a divisor of the modulus");
  if (d % conductor()) throw UsageError("restrict_to: conductor does not divide the new modulus");
  UnitGroup g = UnitGroup::of(d);
  std::vector<int64_t> k;
  for (size_t i = 0; i < g.gens.size(); ++i) {
    int64_t x = g.gens[i];
    while (!is_unit(x)) x += d;
    RootOfUnity v = (*this)(x);
    k.push_back(v.exponent * (g.orders[i] / v.order));
  }
  return from_generator_exponents(d, k);
}

DirichletCharacter DirichletCharacter::primitive() const { return restrict_to(conductor()); }

DirichletCharacter DirichletCharacter::extend(int64_t new_modulus) const {
  if (new_modulus % modulus_) throw UsageError("extend: new modulus must be a multiple");
  UnitGroup g = UnitGroup::of(new_modulus);
  std::vector<int64_t> k;
  for (size_t i = 0; i < g.gens.size(); ++i) {
    RootOfUnity v = (*this)(g.gens[i]);
    k.push_back(v.exponent * (g.orders[i] / v.order));
  }
  return from_generator_exponents(new_modulus, k);
}

DirichletCharacter DirichletCharacter::inverse() const { return pow(-1); }

DirichletCharacter DirichletCharacter::pow(int64_t e) const {
  std::vector<int64_t> k = k_;
  for (auto& x : k) x *= e;
  return from_generator_exponents(modulus_, k);
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  int64_t m = a.modulus_ / gcd64(a.modulus_, b.modulus_) * b.modulus_;
  DirichletCharacter x = a.extend(m), y = b.extend(m);
  std::vector<int64_t> k(x.k_.size());
  for (size_t i = 0; i < k.size(); ++i) k[i] = x.k_[i] + y.k_[i];
  return DirichletCharacter::from_generator_exponents(m, k);
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
  return a.modulus_ == b.modulus_ && a.k_ == b.k_;
}

std::string DirichletCharacter::to_string() const {
  if (is_trivial()) return "trivial mod " + std::to_string(modulus_);
  std::ostringstream os;
  os << "mod " << modulus_ << ":";
  for (size_t i = 0; i < k_.size(); ++i) {
    os << (i ? "," : "") << group_.gens[i] << "->";
    RootOfUnity v = RootOfUnity::make(group_.orders[i], k_[i]);
    os << v.exponent << "/" << v.order;
  }
  return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(int64_t modulus) {
  UnitGroup g = UnitGroup::of(modulus);
  std::vector<DirichletCharacter> out;
  // Lexicographic with the first generator exponent most significant.
  std::vector<int64_t> k(g.gens.size(), 0);
  while (true) {
    out.push_back(DirichletCharacter::from_generator_exponents(modulus, k));
    size_t i = k.size();
    while (i > 0 && ++k[i - 1] == g.orders[i - 1]) k[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

SplitCharacter split_at_p(const DirichletCharacter& eps, int64_t p) {
  if (!is_prime(p)) throw UsageError("split_at_p: p must be prime");
  int64_t M = eps.modulus();
  int64_t pr = 1;
  while (M % (pr * p) == 0) pr *= p;
  int64_t N = M / pr;
  auto part = [&](int64_t mod_here, int64_t other) {
    UnitGroup g = UnitGroup::of(mod_here);
    std::vector<int64_t> k;
    for (size_t i = 0; i < g.gens.size(); ++i) {
      int64_t x = crt(g.gens[i], mod_here, 1, other);
      RootOfUnity v = eps(x);
      k.push_back(v.exponent * (g.orders[i] / v.order));
    }
    return DirichletCharacter::from_generator_exponents(mod_here, k);
  };
  return SplitCharacter{part(N, pr), part(pr, N)};
}

LocalCharacterData local_component(const DirichletCharacter& eps, int64_t p) {
  SplitCharacter s = split_at_p(eps, p);
  LocalCharacterData d;
  d.p = p;
  d.unit_part = s.eps_p.inverse();
  d.value_at_p = s.eps_N.modulus() == 1 ? RootOfUnity{} : s.eps_N(p);
  return d;
}

NfElem primitive_root_of_unity(const FieldPtr& field, int64_t n) {
  if (n == 1) return NfElem(1);
  if (n == 2) return NfElem(-1);
  auto roots = roots_in_field(cyclotomic(static_cast<int>(n)), field);
  if (roots.empty()) throw DomainError("field has no primitive " + std::to_string(n) + "-th root of unity");
  return roots.front();
}

}  // namespace lcomp
