#include "galgebra/algebra.hpp"

#include <stdexcept>
#include <string>

namespace galg {

GroupAlgebra::GroupAlgebra(Field f, Group g) : rep_(std::make_shared<Rep>(Rep{std::move(f), std::move(g)})) {}

bool GroupAlgebra::operator==(const GroupAlgebra& other) const {
  if (rep_ == other.rep_) return true;
  return rep_->field == other.rep_->field && rep_->group.same_rep(other.rep_->group);
}

AlgebraElement GroupAlgebra::zero() const { return AlgebraElement(*this, zero_vec(field(), dim())); }

AlgebraElement GroupAlgebra::one() const { return basis(group().identity()); }

AlgebraElement GroupAlgebra::basis(int g) const {
  if (g < 0 || g >= dim()) throw std::invalid_argument("group element index out of range");
  Vec c = zero_vec(field(), dim());
  c[g] = field().one();
  return AlgebraElement(*this, std::move(c));
}

AlgebraElement GroupAlgebra::from_coeffs(Vec coeffs) const {
  if (static_cast<int>(coeffs.size()) != dim()) throw std::invalid_argument("coefficient count must equal |G|");
  return AlgebraElement(*this, std::move(coeffs));
}

AlgebraElement::AlgebraElement(GroupAlgebra a, Vec c) : alg_(std::move(a)), c_(std::move(c)) {}

namespace {
void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("operands belong to different group algebras");
}
}  // namespace

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_algebra(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_algebra(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& rhs) {
  require_same_algebra(*this, rhs);
  const Group& g = alg_.group();
  Vec out = zero_vec(alg_.field(), alg_.dim());
  for (int i = 0; i < alg_.dim(); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < alg_.dim(); ++j) {
      if (rhs.c_[j].is_zero()) continue;
      out[g.mul(i, j)] += c_[i] * rhs.c_[j];
    }
  }
  c_ = std::move(out);
  return *this;
}

AlgebraElement AlgebraElement::operator*(const FieldElement& s) const {
  AlgebraElement r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
  require_same_algebra(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != rhs.c_[i]) return false;
  return true;
}

AlgebraElement AlgebraElement::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative algebra power");
  AlgebraElement r = alg_.one();
  AlgebraElement base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

FieldElement augmentation(const AlgebraElement& u) {
  FieldElement s = u.algebra().field().zero();
  for (const auto& c : u.coeffs()) s += c;
  return s;
}

namespace {

// right-multiply a coefficient vector by the basis element g
Vec shift_right(const GroupAlgebra& a, const Vec& c, int g) {
  Vec out = zero_vec(a.field(), a.dim());
  for (int h = 0; h < a.dim(); ++h)
    if (!c[h].is_zero()) out[a.group().mul(h, g)] = c[h];
  return out;
}

Vec shift_left(const GroupAlgebra& a, const Vec& c, int g) {
  Vec out = zero_vec(a.field(), a.dim());
  for (int h = 0; h < a.dim(); ++h)
    if (!c[h].is_zero()) out[a.group().mul(g, h)] = c[h];
  return out;
}

}  // namespace

Ideal::Ideal(GroupAlgebra a, RowSpace s) : alg_(std::move(a)), space_(std::move(s)) {
  for (const auto& row : space_.basis()) {
    for (int g = 0; g < alg_.dim(); ++g) {
      if (!space_.contains(shift_right(alg_, row, g)) || !space_.contains(shift_left(alg_, row, g)))
        throw std::invalid_argument("span is not a two-sided ideal");
    }
  }
}

Ideal Ideal::zero(const GroupAlgebra& a) { return Ideal(a, RowSpace(a.field(), a.dim())); }

Ideal Ideal::span_of(const GroupAlgebra& a, const std::vector<AlgebraElement>& gens) {
  Mat rows;
  rows.reserve(gens.size());
  for (const auto& e : gens) {
    if (e.algebra() != a) throw std::invalid_argument("generator from a different algebra");
    rows.push_back(e.coeffs());
  }
  return Ideal(a, RowSpace::from_rows(a.field(), a.dim(), rows));
}

std::vector<AlgebraElement> Ideal::basis_elements() const {
  std::vector<AlgebraElement> out;
  out.reserve(space_.rank());
  for (const auto& row : space_.basis()) out.push_back(alg_.from_coeffs(row));
  return out;
}

Ideal omega_fg(const GroupAlgebra& a) {
  std::vector<AlgebraElement> gens;
  for (int g = 0; g < a.dim(); ++g) {
    if (g == a.group().identity()) continue;
    gens.push_back(a.basis(g) - a.one());
  }
  return Ideal::span_of(a, gens);
}

Ideal omega_n(const GroupAlgebra& a, const Subgroup& n) {
  if (!n.parent().same_rep(a.group())) throw std::invalid_argument("subgroup belongs to a different group");
  if (!n.is_normal()) throw std::invalid_argument("omega(N) requires a normal subgroup");
  std::vector<AlgebraElement> gens;
  for (int h : n.members()) {
    if (h == a.group().identity()) continue;
    AlgebraElement d = a.basis(h) - a.one();
    for (int g = 0; g < a.dim(); ++g) gens.push_back(a.from_coeffs(shift_right(a, d.coeffs(), g)));
  }
  return Ideal::span_of(a, gens);
}

Ideal ideal_product(const Ideal& i, const Ideal& k) {
  if (i.algebra() != k.algebra()) throw std::invalid_argument("ideals from different algebras");
  const GroupAlgebra& a = i.algebra();
  std::vector<AlgebraElement> rows;
  for (const auto& u : i.basis_elements())
    for (const auto& v : k.basis_elements()) rows.push_back(u * v);
  return Ideal::span_of(a, rows);
}

int nilpotency_index(const Ideal& i) {
  if (i.is_zero()) return 1;
  Ideal power = i;
  int t = 1;
  while (!power.is_zero()) {
    if (t > i.algebra().dim() + 1)
      throw std::domain_error("ideal is not nilpotent (semisimple-case misuse of nilpotency_index)");
    power = ideal_product(power, i);
    ++t;
  }
  return t;
}

std::vector<AlgebraElement> center_basis(const GroupAlgebra& a) {
  std::vector<AlgebraElement> out;
  for (const auto& cls : conjugacy_classes(a.group())) {
    AlgebraElement sum = a.zero();
    for (int g : cls) sum += a.basis(g);
    for (int g = 0; g < a.dim(); ++g)
      if (sum * a.basis(g) != a.basis(g) * sum) throw std::logic_error("class sum fails to be central");
    out.push_back(std::move(sum));
  }
  return out;
}

namespace {
bool is_p_power(int n, std::int64_t p) {
  while (n % p == 0) n = static_cast<int>(n / p);
  return n == 1;
}
}  // namespace

Ideal jacobson_radical(const GroupAlgebra& a) {
  std::int64_t p = a.field().characteristic();
  int n = a.dim();
  if (n % p != 0) return Ideal::zero(a);  // Maschke: semisimple
  if (is_p_power(n, p)) return omega_fg(a);
  throw std::domain_error(
      "out of scope: characteristic divides |G| but G is not a p-group; "
      "only the p-group and coprime regimes are supported");
}

Ideal radical_lift(const GroupAlgebra& a, const Subgroup& h) {
  if (!h.parent().same_rep(a.group())) throw std::invalid_argument("subgroup belongs to a different group");
  auto [hg, back] = h.as_group();
  GroupAlgebra ha(a.field(), hg);
  Ideal jh = jacobson_radical(ha);
  std::vector<AlgebraElement> rows;
  for (const auto& b : jh.basis_elements()) {
    // embed the subgroup-algebra vector into A
    Vec lifted = zero_vec(a.field(), a.dim());
    for (int i = 0; i < hg.size(); ++i) lifted[back[i]] = b.coeffs()[i];
    for (int g = 0; g < a.dim(); ++g) rows.push_back(a.from_coeffs(shift_right(a, lifted, g)));
  }
  return Ideal::span_of(a, rows);
}

bool radical_subgroup_consistency(const GroupAlgebra& a, const Subgroup& h) {
  if (!h.is_normal()) throw std::invalid_argument("radical consistency check requires a normal subgroup");
  std::int64_t index = a.dim() / h.order();
  if (index % a.field().characteristic() == 0)
    throw std::domain_error("subgroup index is not invertible in the coefficient field");
  return radical_lift(a, h) == jacobson_radical(a);
}

QuotientAlgebra::QuotientAlgebra(GroupAlgebra a, Ideal i) : alg_(std::move(a)), ideal_(std::move(i)) {
  if (ideal_.algebra() != alg_) throw std::invalid_argument("ideal from a different algebra");
  section_ = ideal_.space().complement_columns();
}

Vec QuotientAlgebra::project(const AlgebraElement& u) const {
  Vec residual = ideal_.space().reduce(u.coeffs());
  Vec coords;
  coords.reserve(section_.size());
  for (int col : section_) coords.push_back(residual[col]);
  return coords;
}

AlgebraElement QuotientAlgebra::section(const Vec& coords) const {
  if (coords.size() != section_.size()) throw std::invalid_argument("coordinate count must equal quotient dim");
  Vec c = zero_vec(alg_.field(), alg_.dim());
  for (std::size_t i = 0; i < section_.size(); ++i) c[section_[i]] = coords[i];
  return alg_.from_coeffs(std::move(c));
}

Vec QuotientAlgebra::mul(const Vec& a, const Vec& b) const { return project(section(a) * section(b)); }

Vec QuotientAlgebra::one() const { return project(alg_.one()); }

QuotientAlgebra quotient_algebra(const GroupAlgebra& a, const Ideal& i) { return QuotientAlgebra(a, i); }

Mat regular_representation(const GroupAlgebra& a, const AlgebraElement& u) {
  Mat rows;
  rows.reserve(a.dim());
  for (int g = 0; g < a.dim(); ++g) rows.push_back((u * a.basis(g)).coeffs());
  return rows;
}

bool is_unit(const GroupAlgebra& a, const AlgebraElement& u) {
  return rank_of(a.field(), a.dim(), regular_representation(a, u)) == a.dim();
}

std::optional<AlgebraElement> inverse(const GroupAlgebra& a, const AlgebraElement& u) {
  // solve u * v = 1 for v's coordinates: column j of the system is u * g_j
  Mat cols = regular_representation(a, u);
  Mat m(a.dim(), zero_vec(a.field(), a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m[i][j] = cols[j][i];
  Vec b = a.one().coeffs();
  Vec x = solve(a.field(), std::move(m), std::move(b));
  if (x.empty()) return std::nullopt;
  AlgebraElement v = a.from_coeffs(std::move(x));
  if (u * v != a.one() || v * u != a.one()) return std::nullopt;
  return v;
}

}  // namespace galg
