#include "galgebra/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace galg {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 31;

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

// --- polynomials over F_p, used only for modulus selection/verification ---
// Coefficient vectors, constant term first, no trailing zeros.

using PVec = std::vector<std::int64_t>;

void ptrim(PVec& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ptrim(r);
  return r;
}

// f mod g, g monic
PVec pmod(PVec f, const PVec& g, std::int64_t p) {
  while (f.size() >= g.size()) {
    std::int64_t c = f.back();
    std::size_t shift = f.size() - g.size();
    if (c != 0)
      for (std::size_t i = 0; i < g.size(); ++i)
        f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    f.pop_back();
    ptrim(f);
    if (f.empty()) break;
  }
  return f;
}

PVec pgcd(PVec a, PVec b, std::int64_t p) {
  while (!b.empty()) {
    // make b monic for pmod
    std::int64_t lc = b.back();
    if (lc != 1) {
      std::int64_t li = mod_pow(lc, p - 2, p);
      for (auto& c : b) c = c * li % p;
    }
    PVec r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PVec ppowmod(PVec base, std::int64_t e, const PVec& m, std::int64_t p) {
  PVec r = {1};
  base = pmod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// Trial of gcd(x^{p^i} - x, f) for 0 < i < n, plus degree/monic constraints.
bool modulus_irreducible(const PVec& f, std::int64_t p) {
  int n = static_cast<int>(f.size()) - 1;
  if (n < 1 || f.back() != 1) return false;
  if (n == 1) return true;
  PVec xq = {0, 1};  // x
  for (int i = 1; i < n; ++i) {
    xq = ppowmod(std::move(xq), p, f, p);  // x^{p^i} mod f
    PVec diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    ptrim(diff);
    PVec g = pgcd(f, diff, p);
    if (!(g.size() == 1 && g[0] != 0)) return false;  // nontrivial factor
  }
  return true;
}

PVec least_irreducible(std::int64_t p, int n) {
  if (n == 1) return {0, 1};  // x
  // Lexicographic order on (c_0, c_1, ..., c_{n-1}), constant term most
  // significant.
  std::vector<std::int64_t> c(n, 0);
  for (;;) {
    PVec f(c.begin(), c.end());
    f.push_back(1);
    if (modulus_irreducible(f, p)) return f;
    int i = n - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::pair<std::int64_t, int> prime_power_decompose(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d) continue;
    int n = 0;
    std::int64_t r = q;
    while (r % d == 0) {
      r /= d;
      ++n;
    }
    if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {d, n};
  }
  return {q, 1};  // q itself prime
}

Field::Field(std::int64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
  if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) {
    if (q > kMaxOrder / p) throw std::overflow_error("field order p^n exceeds 2^31");
    q *= p;
  }
  rep_ = std::make_shared<Rep>(Rep{p, n, q, least_irreducible(p, n)});
}

Field::Field(std::int64_t p, int n, std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
  if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) {
    if (q > kMaxOrder / p) throw std::overflow_error("field order p^n exceeds 2^31");
    q *= p;
  }
  for (auto& c : modulus) c = (c % p + p) % p;
  if (static_cast<int>(modulus.size()) != n + 1 || !modulus_irreducible(modulus, p))
    throw std::invalid_argument("modulus is not a monic irreducible of degree n");
  rep_ = std::make_shared<Rep>(Rep{p, n, q, std::move(modulus)});
}

bool Field::operator==(const Field& other) const {
  if (rep_ == other.rep_) return true;
  return rep_->p == other.rep_->p && rep_->modulus == other.rep_->modulus;
}

FieldElement Field::zero() const { return FieldElement(*this, std::vector<std::int64_t>(rep_->n, 0)); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const {
  std::vector<std::int64_t> c(rep_->n, 0);
  c[0] = (v % rep_->p + rep_->p) % rep_->p;
  return FieldElement(*this, std::move(c));
}

FieldElement Field::element(std::vector<std::int64_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(rep_->n))
    throw std::invalid_argument("coefficient vector longer than extension degree");
  coeffs.resize(rep_->n, 0);
  for (auto& c : coeffs) c = (c % rep_->p + rep_->p) % rep_->p;
  return FieldElement(*this, std::move(coeffs));
}

FieldElement Field::from_label(std::int64_t label) const {
  if (label < 0 || label >= rep_->q) throw std::invalid_argument("element label out of range");
  std::vector<std::int64_t> c(rep_->n, 0);
  for (int i = 0; i < rep_->n; ++i) {
    c[i] = label % rep_->p;
    label /= rep_->p;
  }
  return FieldElement(*this, std::move(c));
}

std::int64_t Field::label(const FieldElement& a) const {
  std::int64_t l = 0;
  for (int i = rep_->n - 1; i >= 0; --i) l = l * rep_->p + a.coeffs()[i];
  return l;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(rep_->q);
  for (std::int64_t l = 0; l < rep_->q; ++l) out.push_back(from_label(l));
  return out;
}

FieldElement::FieldElement(Field f, std::vector<std::int64_t> c) : field_(std::move(f)), c_(std::move(c)) {}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t v) { return v == 0; });
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) throw std::invalid_argument("operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  std::int64_t p = field_.characteristic();
  for (auto& c : r.c_) c = (p - c) % p;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  std::int64_t p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + rhs.c_[i]) % p;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  std::int64_t p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = ((c_[i] - rhs.c_[i]) % p + p) % p;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  std::int64_t p = field_.characteristic();
  int n = field_.degree();
  if (n == 1) {
    c_[0] = c_[0] * rhs.c_[0] % p;
    return *this;
  }
  std::vector<std::int64_t> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + c_[i] * rhs.c_[j]) % p;
  }
  const auto& mod = field_.modulus();
  for (int d = 2 * n - 2; d >= n; --d) {
    std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < n; ++i)
      prod[d - n + i] = ((prod[d - n + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(n);
  c_ = std::move(prod);
  return *this;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return c_ == rhs.c_;
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return pow(a, a.field().order() - 2);
}

FieldElement pow(const FieldElement& a, std::int64_t e) {
  if (e < 0) return pow(inv(a), -e);
  FieldElement r = a.field().one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

FieldElement frobenius(const FieldElement& a) { return pow(a, a.field().characteristic()); }

}  // namespace galg
