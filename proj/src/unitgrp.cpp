#include "galgebra/unitgrp.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>

namespace galg {

namespace {

constexpr std::int64_t kEnumerationCap = 1 << 16;

Ideal modular_radical(const GroupAlgebra& a) {
  Ideal j = jacobson_radical(a);
  if (j.rank() != a.dim() - 1 && j.rank() != 0)
    throw std::logic_error("unexpected radical rank");
  return j;
}

std::int64_t enumeration_size(const GroupAlgebra& a, int rank) {
  std::int64_t size = 1;
  for (int i = 0; i < rank; ++i) {
    if (size > kEnumerationCap / a.field().order() + 1) return -1;
    size *= a.field().order();
    if (size > kEnumerationCap) return -1;
  }
  return size;
}

// --- char-2, F_2 coefficient fast path: elements are bit masks over the
// group basis, products XOR together precomputed left-translation tables ---
struct MaskState {
  int dim;
  int size;
  std::vector<std::vector<std::uint16_t>> perm;  // perm[g][mask] = g * mask
  std::vector<std::uint16_t> vmask;              // V index -> mask
  std::vector<int> index_of;                     // mask -> V index or -1
  std::uint16_t mul_mask(std::uint16_t u, std::uint16_t v) const {
    std::uint16_t r = 0;
    while (u) {
      r ^= perm[std::countr_zero(static_cast<unsigned>(u))][v];
      u &= static_cast<std::uint16_t>(u - 1);
    }
    return r;
  }
};

std::shared_ptr<MaskState> build_mask_state(const GroupAlgebra& a, const Ideal& j, std::int64_t size) {
  auto st = std::make_shared<MaskState>();
  st->dim = a.dim();
  st->size = static_cast<int>(size);
  const Group& g = a.group();
  int full = 1 << st->dim;
  st->perm.assign(st->dim, std::vector<std::uint16_t>(full, 0));
  for (int e = 0; e < st->dim; ++e) {
    auto& t = st->perm[e];
    for (int m = 1; m < full; ++m) {
      int low = m & -m;
      t[m] = t[m ^ low] ^ static_cast<std::uint16_t>(1 << g.mul(e, std::countr_zero(static_cast<unsigned>(low))));
    }
  }
  std::vector<std::uint16_t> bmask(j.rank(), 0);
  for (int i = 0; i < j.rank(); ++i) {
    const Vec& row = j.space().basis()[i];
    for (int c = 0; c < st->dim; ++c)
      if (!row[c].is_zero()) bmask[i] = static_cast<std::uint16_t>(bmask[i] ^ (1 << c));
  }
  st->vmask.assign(st->size, 0);
  st->vmask[0] = static_cast<std::uint16_t>(1 << g.identity());
  for (int idx = 1; idx < st->size; ++idx) {
    int low = idx & -idx;
    st->vmask[idx] = st->vmask[idx ^ low] ^ bmask[std::countr_zero(static_cast<unsigned>(low))];
  }
  st->index_of.assign(full, -1);
  for (int idx = 0; idx < st->size; ++idx) st->index_of[st->vmask[idx]] = idx;
  return st;
}

// --- general path: elements are 1 + sum c_i b_i over the echelon radical
// basis; indices are mixed-radix coefficient labels ---
struct GenericState {
  GroupAlgebra algebra;
  Mat rows;
  std::vector<int> pivots;
  std::int64_t q;
  int size;
  AlgebraElement element(int idx) const {
    AlgebraElement u = algebra.one();
    std::int64_t rem = idx;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::int64_t digit = rem % q;
      rem /= q;
      if (digit) u += algebra.from_coeffs(rows[i]) * algebra.field().from_label(digit);
    }
    return u;
  }
  int index_of(const AlgebraElement& u) const {
    Vec w = u.coeffs();
    w[algebra.group().identity()] -= algebra.field().one();
    std::int64_t idx = 0, base = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      FieldElement c = w[pivots[i]];
      idx += algebra.field().label(c) * base;
      base *= q;
      if (!c.is_zero())
        for (int col = 0; col < algebra.dim(); ++col) w[col] -= c * rows[i][col];
    }
    if (!is_zero_vec(w)) throw std::domain_error("product escaped the unit set 1 + J");
    return static_cast<int>(idx);
  }
};

}  // namespace

UnitGroupEnumeration enumerate_v(const GroupAlgebra& a) {
  Ideal j = modular_radical(a);
  std::int64_t size = enumeration_size(a, j.rank());
  if (size < 0)
    throw std::domain_error("q^{dim J} exceeds the 2^16 enumeration cap; use the analytic path");
  std::vector<std::string> names(size);
  for (std::int64_t i = 0; i < size; ++i) names[i] = "u" + std::to_string(i);

  if (a.field().order() == 2 && a.dim() <= 16) {
    auto st = build_mask_state(a, j, size);
    auto mul = [st](int x, int y) {
      int idx = st->index_of[st->mul_mask(st->vmask[x], st->vmask[y])];
      if (idx < 0) throw std::domain_error("product escaped the unit set 1 + J");
      return idx;
    };
    Group vg = Group::from_unit_set(static_cast<int>(size), mul, std::move(names));
    GroupAlgebra alg = a;
    auto getter = [st, alg](int idx) {
      Vec c = zero_vec(alg.field(), alg.dim());
      std::uint16_t m = st->vmask[idx];
      while (m) {
        c[std::countr_zero(static_cast<unsigned>(m))] = alg.field().one();
        m &= static_cast<std::uint16_t>(m - 1);
      }
      return alg.from_coeffs(std::move(c));
    };
    return {std::move(vg), a, std::move(getter)};
  }

  auto st = std::make_shared<GenericState>(
      GenericState{a, j.space().basis(), j.space().pivots(), a.field().order(), static_cast<int>(size)});
  auto mul = [st](int x, int y) { return st->index_of(st->element(x) * st->element(y)); };
  Group vg = Group::from_unit_set(static_cast<int>(size), mul, std::move(names));
  auto getter = [st](int idx) { return st->element(idx); };
  return {std::move(vg), a, std::move(getter)};
}

UnitQuotientInfo unit_quotient(const GroupAlgebra& a) {
  Ideal j = jacobson_radical(a);
  if (j.rank() != a.dim() - 1)
    throw std::domain_error("unit quotient description requires the modular p-group regime");
  QuotientAlgebra q(a, j);
  UnitQuotientInfo info;
  std::int64_t qq = a.field().order();
  info.order = BigInt(qq) - 1;
  info.description = "C_" + info.order.str();
  Vec e = q.one();
  info.quotient_is_field = q.dim() == 1 && q.mul(e, e) == e && !is_zero_vec(e);
  info.cyclic_verified = false;
  if (qq <= (1 << 20)) {
    // exhaustive multiplicative orders: cyclic iff some element has order q-1
    std::int64_t best = 0;
    for (std::int64_t l = 1; l < qq; ++l) {
      FieldElement x = a.field().from_label(l);
      FieldElement acc = x;
      std::int64_t o = 1;
      while (!acc.is_one()) {
        acc *= x;
        ++o;
      }
      best = std::max(best, o);
    }
    info.cyclic_verified = best == qq - 1;
  }
  return info;
}

namespace {

RowSpace square_span(const GroupAlgebra& a, const RowSpace& w) {
  std::vector<AlgebraElement> basis;
  for (const auto& row : w.basis()) basis.push_back(a.from_coeffs(row));
  Mat rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    rows.push_back((basis[i] * basis[i]).coeffs());
    for (std::size_t k = 0; k < i; ++k) rows.push_back((basis[i] * basis[k] + basis[k] * basis[i]).coeffs());
  }
  return RowSpace::from_rows(a.field(), a.dim(), rows);
}

AlgebraElement iterated_square(AlgebraElement u, int times) {
  for (int i = 0; i < times; ++i) u *= u;
  return u;
}

}  // namespace

ExponentCertificate exponent_of_v(const GroupAlgebra& a) {
  Ideal j = modular_radical(a);
  ExponentCertificate cert;
  cert.radical_nilpotency_index = nilpotency_index(j);
  cert.square_span_dims = {j.rank()};
  if (j.rank() == 0) {
    cert.exponent = 1;
    cert.witness_found = true;
    return cert;
  }
  if (a.field().characteristic() == 2) {
    RowSpace w = j.space();
    int s = 0;
    while (w.rank() > 0) {
      w = square_span(a, w);
      ++s;
      cert.square_span_dims.push_back(w.rank());
      if (s > 63) throw std::logic_error("square-span chain failed to terminate");
    }
    cert.exponent = 1 << s;
    cert.witness_found = false;
    // witness with j^{2^{s-1}} != 0: radical basis first, then seeded random
    for (const auto& b : j.basis_elements()) {
      if (!iterated_square(b, s - 1).is_zero()) {
        cert.witness = b;
        cert.witness_found = true;
        break;
      }
    }
    if (!cert.witness_found) {
      std::mt19937_64 rng(0);
      std::uniform_int_distribution<std::int64_t> dist(0, a.field().order() - 1);
      auto basis = j.basis_elements();
      for (int trial = 0; trial < 10000 && !cert.witness_found; ++trial) {
        AlgebraElement u = a.zero();
        for (const auto& b : basis) u += b * a.field().from_label(dist(rng));
        if (!iterated_square(u, s - 1).is_zero()) {
          cert.witness = u;
          cert.witness_found = true;
        }
      }
    }
    return cert;
  }
  // p > 2: read the exponent off the enumerated group
  UnitGroupEnumeration units = enumerate_v(a);
  std::int64_t e = 1;
  for (int g = 0; g < units.group.size(); ++g)
    e = std::lcm(e, static_cast<std::int64_t>(units.group.element_order(g)));
  cert.exponent = static_cast<int>(e);
  cert.witness_found = true;
  return cert;
}

ModularVAnalysis analyze_enumerated_v(const GroupAlgebra& a) {
  UnitGroupEnumeration units = enumerate_v(a);
  const Group& v = units.group;
  LowerCentralSeries lcs = lower_central_series(v);
  ModularVAnalysis out;
  for (const auto& s : lcs.series) out.series_sizes.push_back(s.order());
  if (!lcs.nilpotency_class)
    throw std::logic_error("1 + J of a modular p-group algebra must be nilpotent");
  out.nilpotency_class = *lcs.nilpotency_class;

  const Subgroup& vp = lcs.series.size() > 1 ? lcs.series[1] : Subgroup::trivial(v);
  // V' inside the algebra centre: commutes with every group basis element
  out.derived_in_center = true;
  for (int idx : vp.members()) {
    AlgebraElement u = units.element(idx);
    for (int g = 0; g < a.dim() && out.derived_in_center; ++g)
      if (u * a.basis(g) != a.basis(g) * u) out.derived_in_center = false;
    if (!out.derived_in_center) break;
  }
  // V'' central in V, elementwise
  auto [vp_group, back] = vp.as_group();
  Subgroup vpp_local = commutator_subgroup(vp_group);
  out.second_derived_central = true;
  for (int local : vpp_local.members()) {
    int u = back[local];
    for (int w = 0; w < v.size(); ++w)
      if (v.mul(u, w) != v.mul(w, u)) {
        out.second_derived_central = false;
        break;
      }
    if (!out.second_derived_central) break;
  }
  std::int64_t e = 1;
  for (int g = 0; g < v.size(); ++g) e = std::lcm(e, static_cast<std::int64_t>(v.element_order(g)));
  out.exponent = static_cast<int>(e);
  if (a.field().characteristic() == 2) {
    for (int g = 0; g < v.size() && out.squaring_matches_radical; ++g) {
      AlgebraElement u = units.element(g);
      AlgebraElement jj = u - a.one();
      if (units.element(v.mul(g, g)) != a.one() + jj * jj) out.squaring_matches_radical = false;
    }
  }
  return out;
}

int nilpotency_class_of_v(const GroupAlgebra& a) {
  Ideal j = modular_radical(a);
  if (j.rank() == 0) return 0;
  return analyze_enumerated_v(a).nilpotency_class;
}

MetabelianFlags centrally_metabelian_check(const GroupAlgebra& a) {
  ModularVAnalysis an = analyze_enumerated_v(a);
  return {an.derived_in_center, an.second_derived_central};
}

ModularUnitReport modular_unit_report(const GroupAlgebra& a) {
  Ideal j = modular_radical(a);
  ModularUnitReport rep;
  rep.dim_j = j.rank();
  rep.order_v = 1;
  for (int i = 0; i < rep.dim_j; ++i) rep.order_v *= a.field().order();
  ExponentCertificate cert = exponent_of_v(a);
  rep.exponent = cert.exponent;
  rep.exponent_witnessed = cert.witness_found;
  rep.square_span_dims = cert.square_span_dims;
  rep.radical_nilpotency_index = cert.radical_nilpotency_index;
  rep.quotient = unit_quotient(a);
  if (enumeration_size(a, j.rank()) > 0) {
    ModularVAnalysis an = analyze_enumerated_v(a);
    rep.nilpotency_class = an.nilpotency_class;
    rep.derived_in_center = an.derived_in_center;
    rep.second_derived_central = an.second_derived_central;
  }
  return rep;
}

std::string semisimple_unit_structure(const WedderburnShape& shape, std::int64_t q) {
  std::string out;
  std::size_t i = 0;
  while (i < shape.components.size()) {
    std::size_t run = i + 1;
    while (run < shape.components.size() && shape.components[run] == shape.components[i]) ++run;
    BigInt qd = 1;
    for (int t = 0; t < shape.components[i].d; ++t) qd *= q;
    std::string part;
    if (shape.components[i].n == 1)
      part = "C_" + BigInt(qd - 1).str();
    else
      part = "GL(" + std::to_string(shape.components[i].n) + "," + qd.str() + ")";
    if (run - i > 1) part += "^" + std::to_string(run - i);
    if (!out.empty()) out += " x ";
    out += part;
    i = run;
  }
  if (out.empty()) out = "C_1";
  return out;
}

}  // namespace galg
