#include "galgebra/wedderburn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "galgebra/poly.hpp"

namespace galg {

std::vector<std::int64_t> t_group(std::int64_t q, std::int64_t m) {
  if (m < 1 || std::gcd(q, m) != 1) throw std::invalid_argument("t_group requires gcd(q, m) = 1");
  std::set<std::int64_t> seen;
  std::int64_t t = 1 % m;
  while (!seen.count(t)) {
    seen.insert(t);
    t = t * (q % m) % m;
  }
  return {seen.begin(), seen.end()};
}

FConjPartition f_conjugacy(const Group& g, std::int64_t p, std::int64_t q) {
  int n = g.size();
  std::vector<int> regular;
  std::int64_t m = 1;
  for (int e = 0; e < n; ++e) {
    if (!g.is_p_regular(e, p)) continue;
    regular.push_back(e);
    m = std::lcm(m, static_cast<std::int64_t>(g.element_order(e)));
  }
  FConjPartition out;
  out.m = m;
  out.t_residues = t_group(q, m);
  std::vector<bool> seen(n, false);
  for (int e : regular) {
    if (seen[e]) continue;
    std::set<int> orbit;
    std::vector<int> stack{e};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (orbit.count(u)) continue;
      orbit.insert(u);
      for (int h = 0; h < n; ++h) {
        int c = g.conjugate(u, h);
        if (!orbit.count(c)) stack.push_back(c);
      }
      for (std::int64_t t : out.t_residues) {
        int c = g.power(u, t);
        if (!orbit.count(c)) stack.push_back(c);
      }
    }
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int v : cls) seen[v] = true;
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

namespace {

// polynomial evaluation at a central element w, with e acting as the unit of
// the block (w^0 = e)
AlgebraElement eval_in_block(const Polynomial& m, const AlgebraElement& w, const AlgebraElement& e) {
  const GroupAlgebra& a = w.algebra();
  AlgebraElement acc = a.zero();
  for (int i = m.degree(); i >= 0; --i) acc = acc * w + e * m.coeff(i);
  return acc;
}

Polynomial block_min_poly(const AlgebraElement& w, const AlgebraElement& e) {
  const GroupAlgebra& a = w.algebra();
  auto step = [&](const Vec& v) { return (a.from_coeffs(v) * w).coeffs(); };
  return min_poly(e.coeffs(), step, a.field());
}

std::vector<std::int64_t> element_key(const AlgebraElement& e) {
  std::vector<std::int64_t> key;
  key.reserve(e.coeffs().size());
  for (const auto& c : e.coeffs()) key.push_back(e.algebra().field().label(c));
  return key;
}

}  // namespace

IdempotentDecomposition central_idempotents(const GroupAlgebra& a, std::uint64_t seed) {
  if (a.dim() % a.field().characteristic() == 0)
    throw std::domain_error("central idempotent splitting requires a semisimple algebra (p must not divide |G|)");
  std::vector<AlgebraElement> centre = center_basis(a);
  std::vector<AlgebraElement> blocks{a.one()};
  std::vector<AlgebraElement> done;
  while (!blocks.empty()) {
    AlgebraElement e = blocks.back();
    blocks.pop_back();
    bool split = false;
    for (const auto& z : centre) {
      AlgebraElement w = z * e;
      Polynomial m = block_min_poly(w, e);
      auto factors = factor(m, seed);
      if (factors.size() == 1 && factors[0].multiplicity == 1) continue;
      for (const auto& pf : factors)
        if (pf.multiplicity != 1)
          throw std::logic_error("repeated factor in a central minimal polynomial of a semisimple algebra");
      // CRT projectors: u_i = (m/f_i) * ((m/f_i)^{-1} mod f_i), evaluated at w
      for (const auto& pf : factors) {
        Polynomial cofactor = m / pf.factor;
        Polynomial proj = (cofactor * mod_inverse(cofactor, pf.factor)) % m;
        AlgebraElement ei = eval_in_block(proj, w, e);
        if (ei.is_zero()) throw std::logic_error("CRT projector produced a zero idempotent");
        blocks.push_back(std::move(ei));
      }
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(e));
  }
  // exactness checks: orthogonal idempotents summing to one
  AlgebraElement sum = a.zero();
  for (const auto& e : done) {
    if (e * e != e) throw std::logic_error("non-idempotent block element");
    sum += e;
  }
  if (sum != a.one()) throw std::logic_error("idempotents do not sum to one");
  for (std::size_t i = 0; i < done.size(); ++i)
    for (std::size_t j = i + 1; j < done.size(); ++j)
      if (!(done[i] * done[j]).is_zero() || !(done[j] * done[i]).is_zero())
        throw std::logic_error("idempotents are not orthogonal");

  IdempotentDecomposition dec;
  std::vector<int> dims, degs;
  for (const auto& e : done) {
    Mat rows;
    for (int g = 0; g < a.dim(); ++g) rows.push_back((a.basis(g) * e).coeffs());
    dims.push_back(rank_of(a.field(), a.dim(), rows));
    Mat zrows;
    for (const auto& z : centre) zrows.push_back((z * e).coeffs());
    degs.push_back(rank_of(a.field(), a.dim(), zrows));
  }
  std::vector<std::size_t> order(done.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (degs[i] != degs[j]) return degs[i] < degs[j];
    if (dims[i] != dims[j]) return dims[i] < dims[j];
    return element_key(done[i]) < element_key(done[j]);
  });
  for (std::size_t k : order) {
    dec.idempotents.push_back(done[k]);
    dec.component_dims.push_back(dims[k]);
    dec.field_degrees.push_back(degs[k]);
  }
  return dec;
}

WedderburnShape shape_from_decomposition(const IdempotentDecomposition& dec) {
  WedderburnShape shape;
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    int dim = dec.component_dims[i];
    int d = dec.field_degrees[i];
    if (d <= 0 || dim % d != 0) throw std::logic_error("component dimension not divisible by its field degree");
    int ratio = dim / d;
    int n = 0;
    while (n * n < ratio) ++n;
    if (n * n != ratio) throw std::logic_error("component dimension over field degree is not a perfect square");
    shape.components.push_back({n, d});
  }
  std::sort(shape.components.begin(), shape.components.end(),
            [](const WedderburnComponent& a, const WedderburnComponent& b) {
              return a.d != b.d ? a.d < b.d : a.n < b.n;
            });
  return shape;
}

WedderburnShape wedderburn_shape(const GroupAlgebra& a, std::uint64_t seed) {
  return shape_from_decomposition(central_idempotents(a, seed));
}

int l_value(std::int64_t q, std::int64_t m) {
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("l_value expects the quasidihedral rotation order (even, >= 4)");
  if (std::gcd(q, m) != 1) throw std::invalid_argument("l_value requires gcd(q, m) = 1");
  std::int64_t twist = m / 2 - 1;
  std::int64_t t = q % m;
  for (int l = 1; l <= 2 * m; ++l) {
    if (t == 1 || t == twist) return l;
    t = t * (q % m) % m;
  }
  throw std::logic_error("no class-fixing power found");  // unreachable: q^ord(q) = 1
}

std::int64_t lcm_noncommutative_degrees(const WedderburnShape& shape) {
  std::int64_t l = 1;
  for (const auto& c : shape.components)
    if (c.n > 1) l = std::lcm(l, static_cast<std::int64_t>(c.d));
  return l;
}

BigInt gl_order(int n, const BigInt& q_power) {
  BigInt qn = 1;
  for (int i = 0; i < n; ++i) qn *= q_power;
  BigInt out = 1, qt = 1;
  for (int t = 0; t < n; ++t) {
    out *= qn - qt;
    qt *= q_power;
  }
  return out;
}

BigInt unit_group_order(const WedderburnShape& shape, std::int64_t q) {
  BigInt out = 1;
  for (const auto& c : shape.components) {
    BigInt qd = 1;
    for (int i = 0; i < c.d; ++i) qd *= q;
    out *= gl_order(c.n, qd);
  }
  return out;
}

bool witt_berman_crosscheck(const GroupAlgebra& a, std::uint64_t seed) {
  FConjPartition part = f_conjugacy(a.group(), a.field().characteristic(), a.field().order());
  IdempotentDecomposition dec = central_idempotents(a, seed);
  return part.class_count() == static_cast<int>(dec.idempotents.size());
}

}  // namespace galg
