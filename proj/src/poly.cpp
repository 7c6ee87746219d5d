#include "galgebra/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace galg {

Polynomial::Polynomial(Field f) : field_(std::move(f)) {}

Polynomial::Polynomial(Field f, std::vector<FieldElement> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw std::invalid_argument("coefficient from a different field");
  trim();
}

Polynomial Polynomial::from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return Polynomial(f, std::move(c));
}

Polynomial Polynomial::x(const Field& f) { return from_ints(f, {0, 1}); }

Polynomial Polynomial::constant(const Field& f, const FieldElement& c) { return Polynomial(f, {c}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
  return c_[i];
}

FieldElement Polynomial::leading() const {
  if (c_.empty()) return field_.zero();
  return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<FieldElement> out(std::max(c_.size(), rhs.c_.size()), field_.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<FieldElement> out(std::max(c_.size(), rhs.c_.size()), field_.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  std::vector<FieldElement> out(c_.size() + rhs.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  std::vector<FieldElement> out = c_;
  for (auto& v : out) v *= c;
  return Polynomial(field_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (c_.size() != rhs.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != rhs.c_[i]) return false;
  return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  int dd = divisor.degree();
  if (rem.degree() < dd) return {Polynomial(field_), rem};
  std::vector<FieldElement> q(rem.degree() - dd + 1, field_.zero());
  FieldElement li = inv(divisor.leading());
  while (rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    FieldElement c = rem.leading() * li;
    q[shift] = c;
    for (int i = 0; i <= dd; ++i) rem.c_[shift + i] -= c * divisor.c_[i];
    rem.trim();
  }
  return {Polynomial(field_, std::move(q)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * inv(leading());
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial(field_);
  std::vector<FieldElement> out(c_.size() - 1, field_.zero());
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * field_.from_int(static_cast<std::int64_t>(i));
  return Polynomial(field_, std::move(out));
}

FieldElement Polynomial::eval(const FieldElement& at) const {
  FieldElement acc = field_.zero();
  for (int i = degree(); i >= 0; --i) acc = acc * at + c_[i];
  return acc;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial pow_mod(Polynomial base, std::int64_t e, const Polynomial& m) {
  Polynomial r = Polynomial::from_ints(base.field(), {1});
  base = base % m;
  while (e > 0) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

Polynomial mod_inverse(const Polynomial& a, const Polynomial& m) {
  const Field& F = a.field();
  Polynomial r0 = m, r1 = a % m;
  Polynomial s0(F), s1 = Polynomial::from_ints(F, {1});
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Polynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial is not invertible modulo m");
  return (s0 * inv(r0.leading())) % m;
}

namespace {

// x^{q^d} mod f, iterating d single q-power steps (q fits in 64 bits).
Polynomial x_qpow_mod(const Polynomial& f, int d) {
  const Field& F = f.field();
  Polynomial t = Polynomial::x(F) % f;
  for (int i = 0; i < d; ++i) t = pow_mod(t, F.order(), f);
  return t;
}

// f(x) = g(x^p); returns g with p-th roots taken on coefficients.
Polynomial pth_root(const Polynomial& f) {
  const Field& F = f.field();
  std::int64_t p = F.characteristic();
  std::int64_t root_exp = F.order() / p;  // c -> c^{q/p} is the p-th root
  std::vector<FieldElement> out;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) out.push_back(pow(f.coeff(i), root_exp));
  return Polynomial(F, std::move(out));
}

// Squarefree decomposition of a monic polynomial: list of (squarefree part,
// multiplicity), multiplicities distinct.
void squarefree_parts(const Polynomial& f, int outer_mult, std::map<int, Polynomial>& out) {
  const Field& F = f.field();
  if (f.degree() < 1) return;
  Polynomial df = f.derivative();
  if (df.is_zero()) {
    squarefree_parts(pth_root(f), outer_mult * static_cast<int>(F.characteristic()), out);
    return;
  }
  Polynomial t = gcd(f, df);
  Polynomial v = (f / t).monic();
  int k = 0;
  while (v.degree() > 0) {
    ++k;
    Polynomial w = gcd(t, v);
    Polynomial s = (v / w).monic();
    if (s.degree() > 0) {
      auto it = out.find(k * outer_mult);
      if (it == out.end())
        out.emplace(k * outer_mult, s);
      else
        it->second = it->second * s;
    }
    t = (t / w).monic();
    v = std::move(w);
  }
  if (t.degree() > 0) squarefree_parts(pth_root(t), outer_mult * static_cast<int>(F.characteristic()), out);
}

// Equal-degree split of a squarefree monic product of degree-d irreducibles.
void equal_degree_split(const Polynomial& f, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  const Field& F = f.field();
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  if (d == 1 && F.order() <= 4096) {
    // deterministic root scan
    for (std::int64_t l = 0; l < F.order(); ++l) {
      FieldElement r = F.from_label(l);
      if (f.eval(r).is_zero()) out.push_back(Polynomial(F, {-r, F.one()}));
    }
    return;
  }
  Polynomial g(F);
  while (true) {
    std::vector<FieldElement> hc(f.degree(), F.zero());
    std::uniform_int_distribution<std::int64_t> dist(0, F.order() - 1);
    for (auto& c : hc) c = F.from_label(dist(rng));
    Polynomial h(F, std::move(hc));
    if (h.degree() < 1) continue;
    Polynomial w(F);
    if (F.characteristic() == 2) {
      // trace map sum_{i<n*d} h^{2^i} mod f
      Polynomial t = h % f;
      w = t;
      std::int64_t steps = static_cast<std::int64_t>(F.degree()) * d;
      for (std::int64_t i = 1; i < steps; ++i) {
        t = (t * t) % f;
        w = (w + t) % f;
      }
    } else {
      // h^{(q^d-1)/2} = (h^{1+q+...+q^{d-1}})^{(q-1)/2}, all 64-bit exponents
      Polynomial norm = h % f;
      Polynomial hq = h % f;
      for (int i = 1; i < d; ++i) {
        hq = pow_mod(hq, F.order(), f);
        norm = (norm * hq) % f;
      }
      w = pow_mod(norm, (F.order() - 1) / 2, f) - Polynomial::from_ints(F, {1});
    }
    g = gcd(w, f);
    if (g.degree() > 0 && g.degree() < f.degree()) break;
  }
  equal_degree_split(g, d, rng, out);
  equal_degree_split((f / g).monic(), d, rng, out);
}

std::vector<int64_t> poly_key(const Polynomial& f) {
  std::vector<int64_t> key;
  key.push_back(f.degree());
  for (int i = f.degree(); i >= 0; --i) key.push_back(f.field().label(f.coeff(i)));
  return key;
}

}  // namespace

std::vector<PolyFactor> factor(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<PolyFactor> out;
  if (f.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  std::map<int, Polynomial> parts;
  squarefree_parts(f.monic(), 1, parts);
  for (const auto& [mult, sf] : parts) {
    // distinct-degree split of the squarefree part
    Polynomial u = sf;
    Polynomial h = Polynomial::x(u.field()) % u;
    for (int d = 1; u.degree() > 0 && d <= u.degree() / 2; ++d) {
      h = pow_mod(h, u.field().order(), u);  // x^{q^d} mod u
      Polynomial g = gcd(h - Polynomial::x(u.field()), u);
      if (g.degree() > 0) {
        std::vector<Polynomial> irr;
        equal_degree_split(g, d, rng, irr);
        for (auto& p : irr) out.push_back({std::move(p), mult});
        u = (u / g).monic();
        h = h % u;
      }
    }
    if (u.degree() > 0) out.push_back({u, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return poly_key(a.factor) < poly_key(b.factor); });
  return out;
}

bool is_irreducible(const Polynomial& f) {
  int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  for (int i = 1; i < n; ++i) {
    Polynomial diff = x_qpow_mod(f, i) - Polynomial::x(f.field());
    Polynomial g = gcd(diff, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

Polynomial min_poly(const Vec& v, const std::function<Vec(const Vec&)>& step, const Field& f) {
  int n = static_cast<int>(v.size());
  // augmented rows [krylov vector | polynomial coefficients], eliminating only
  // on the first n columns
  struct Row {
    Vec lead;
    std::vector<FieldElement> tail;
    int pivot;
  };
  std::vector<Row> rows;
  Vec cur = v;
  for (int t = 0; t <= n + 1; ++t) {
    Vec lead = cur;
    std::vector<FieldElement> tail(n + 2, f.zero());
    tail[t] = f.one();
    for (const auto& r : rows) {
      FieldElement c = lead[r.pivot];
      if (c.is_zero()) continue;
      for (int j = 0; j < n; ++j) lead[j] -= c * r.lead[j];
      for (int j = 0; j < n + 2; ++j) tail[j] -= c * r.tail[j];
    }
    int pivot = -1;
    for (int j = 0; j < n; ++j)
      if (!lead[j].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) {
      // dependence found: tail holds coefficients of the minimal polynomial
      std::vector<FieldElement> coeffs(tail.begin(), tail.begin() + t + 1);
      return Polynomial(f, std::move(coeffs)).monic();
    }
    FieldElement li = inv(lead[pivot]);
    for (auto& c : lead) c *= li;
    for (auto& c : tail) c *= li;
    rows.push_back({std::move(lead), std::move(tail), pivot});
    cur = step(cur);
  }
  throw std::logic_error("krylov sequence exceeded the dimension bound");
}

}  // namespace galg
