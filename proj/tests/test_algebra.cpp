#include <doctest.h>

#include <array>
#include <random>
#include <vector>

#include "galgebra/algebra.hpp"

using namespace galg;

namespace {

AlgebraElement random_element(const GroupAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, a.field().order() - 1);
  Vec c;
  for (int i = 0; i < a.dim(); ++i) c.push_back(a.field().from_label(dist(rng)));
  return a.from_coeffs(std::move(c));
}

GroupAlgebra f2_qd16() { return GroupAlgebra(Field(2, 1), Group::quasidihedral(4)); }
GroupAlgebra f2_qd32() { return GroupAlgebra(Field(2, 1), Group::quasidihedral(5)); }

Subgroup d8_subgroup(const GroupAlgebra& a) {
  const Group& g = a.group();
  return Subgroup::generated_by(g, {g.index_of("a^2"), g.index_of("x")});
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("products through the group table") {
  GroupAlgebra a = f2_qd16();
  const Group& g = a.group();
  AlgebraElement one_plus_a = a.one() + a.basis(g.index_of("a"));
  // char-2 square: (1+a)^2 = 1+a^2
  CHECK(one_plus_a * one_plus_a == a.one() + a.basis(g.index_of("a^2")));
  // x * a = a^3 x as basis elements
  CHECK(a.basis(g.index_of("x")) * a.basis(g.index_of("a")) == a.basis(g.index_of("a^3*x")));
  // u * 1 = u
  std::mt19937_64 rng(1);
  AlgebraElement u = random_element(a, rng);
  CHECK(u * a.one() == u);
  // cross-algebra operands are rejected
  GroupAlgebra b(Field(3, 1), Group::quasidihedral(4));
  CHECK_THROWS_AS(a.one() + b.one(), std::invalid_argument);
  CHECK_THROWS_AS(a.one() * b.one(), std::invalid_argument);
}

TEST_CASE("augmentation is a ring homomorphism") {
  GroupAlgebra a = f2_qd16();
  AlgebraElement one_plus_a = a.one() + a.basis(a.group().index_of("a"));
  CHECK(augmentation(one_plus_a).is_zero());
  for (int g = 0; g < a.dim(); ++g) CHECK(augmentation(a.basis(g) - a.one()).is_zero());

  GroupAlgebra a3(Field(3, 1), Group::quasidihedral(4));
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    AlgebraElement u = random_element(a3, rng);
    AlgebraElement v = random_element(a3, rng);
    CHECK(augmentation(u * v) == augmentation(u) * augmentation(v));
    CHECK(augmentation(u + v) == augmentation(u) + augmentation(v));
  }
}

TEST_CASE("omega ranks: whole algebra, D_8 and C_16 subgroups, trivial subgroup") {
  GroupAlgebra a = f2_qd16();
  CHECK(omega_fg(a).rank() == 15);
  CHECK(omega_n(a, d8_subgroup(a)).rank() == 14);
  CHECK(omega_n(a, Subgroup::trivial(a.group())).rank() == 0);

  GroupAlgebra b = f2_qd32();
  Subgroup c16 = Subgroup::generated_by(b.group(), {b.group().index_of("a")});
  CHECK(omega_n(b, c16).rank() == 30);
}

TEST_CASE("omega(N) rejects non-normal subgroups") {
  GroupAlgebra a = f2_qd16();
  Subgroup h = Subgroup::generated_by(a.group(), {a.group().index_of("x")});
  CHECK(!h.is_normal());
  CHECK_THROWS_AS(omega_n(a, h), std::invalid_argument);
}

TEST_CASE("ideal powers: omega(D_8)^5 = 0 with omega(D_8)^4 != 0") {
  GroupAlgebra a = f2_qd16();
  Ideal od8 = omega_n(a, d8_subgroup(a));
  Ideal p = od8;
  std::vector<int> ranks{p.rank()};
  for (int t = 2; t <= 5; ++t) {
    p = ideal_product(p, od8);
    ranks.push_back(p.rank());
  }
  CHECK(ranks == std::vector<int>{14, 10, 6, 2, 0});
  CHECK(nilpotency_index(od8) == 5);
}

TEST_CASE("J*J is a strict subspace of J; zero ideal has index 1") {
  GroupAlgebra a = f2_qd16();
  Ideal j = jacobson_radical(a);
  Ideal j2 = ideal_product(j, j);
  CHECK(j2.rank() < j.rank());
  for (const auto& e : j2.basis_elements()) CHECK(j.contains(e));
  CHECK(nilpotency_index(Ideal::zero(a)) == 1);
  CHECK_THROWS_AS(nilpotency_index(omega_fg(GroupAlgebra(Field(3, 1), Group::cyclic(4)))), std::domain_error);
}

TEST_CASE("center basis = class sums: dimensions 7, 11, |G| for abelian") {
  CHECK(center_basis(GroupAlgebra(Field(5, 1), Group::quasidihedral(4))).size() == 7);
  CHECK(center_basis(f2_qd16()).size() == 7);
  CHECK(center_basis(f2_qd32()).size() == 11);
  CHECK(center_basis(GroupAlgebra(Field(2, 1), Group::cyclic(6))).size() == 6);
}

TEST_CASE("jacobson radical in the three regimes") {
  CHECK(jacobson_radical(f2_qd16()).rank() == 15);
  CHECK(jacobson_radical(f2_qd32()).rank() == 31);
  CHECK(jacobson_radical(GroupAlgebra(Field(3, 1), Group::quasidihedral(4))).is_zero());
  // mixed case is explicitly out of scope
  CHECK_THROWS_AS(jacobson_radical(GroupAlgebra(Field(3, 1), Group::cyclic(6))), std::domain_error);
}

TEST_CASE("radical consistency through normal subgroups of invertible index") {
  GroupAlgebra a3(Field(3, 1), Group::quasidihedral(4));
  Subgroup rot = Subgroup::generated_by(a3.group(), {a3.group().index_of("a")});
  CHECK(radical_subgroup_consistency(a3, rot));

  GroupAlgebra a5(Field(5, 1), Group::quasidihedral(5));
  Subgroup rot5 = Subgroup::generated_by(a5.group(), {a5.group().index_of("a")});
  CHECK(radical_subgroup_consistency(a5, rot5));

  // index 2 is not invertible in characteristic 2
  GroupAlgebra a2 = f2_qd16();
  CHECK_THROWS_AS(radical_subgroup_consistency(a2, d8_subgroup(a2)), std::domain_error);
}

TEST_CASE("quotient algebra dimensions and structure constants") {
  GroupAlgebra a = f2_qd16();
  Subgroup d8 = d8_subgroup(a);
  QuotientAlgebra q(a, omega_n(a, d8));
  CHECK(q.dim() == 2);
  // A / omega(D_8) is F_2[QD_16/D_8] = F_2 C_2: its radical squares to zero
  Vec e = q.one();
  Vec r = q.project(a.basis(a.group().index_of("x")));  // image of the nontrivial coset
  Vec t = sub(r, e);                                    // generator of the radical of F_2 C_2
  CHECK(is_zero_vec(q.mul(t, t)));

  QuotientAlgebra qj(a, jacobson_radical(a));
  CHECK(qj.dim() == 1);

  QuotientAlgebra qz(a, Ideal::zero(a));
  CHECK(qz.dim() == a.dim());

  // projection-section-projection = projection, on random elements
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraElement u = random_element(a, rng);
    Vec pu = q.project(u);
    CHECK(q.project(q.section(pu)) == pu);
  }

  // structure constants match F_2[G/N] under the coset map, exhaustively,
  // for both reference quotients
  auto check_quotient_constants = [](const GroupAlgebra& alg, const Subgroup& nsub) {
    QuotientAlgebra quo(alg, omega_n(alg, nsub));
    auto res = quotient(alg.group(), nsub);
    GroupAlgebra qa(alg.field(), res.group);
    CHECK(quo.dim() == res.group.size());
    for (int u = 0; u < alg.dim(); ++u)
      for (int v = 0; v < alg.dim(); ++v) {
        Vec lhs = quo.mul(quo.project(alg.basis(u)), quo.project(alg.basis(v)));
        AlgebraElement rhs = qa.basis(res.projection[u]) * qa.basis(res.projection[v]);
        // fold the section representative along cosets and compare
        AlgebraElement lifted = quo.section(lhs);
        Vec folded = zero_vec(alg.field(), res.group.size());
        for (int gidx = 0; gidx < alg.dim(); ++gidx) folded[res.projection[gidx]] += lifted.coeffs()[gidx];
        CHECK(folded == rhs.coeffs());
      }
  };
  check_quotient_constants(a, d8);
  GroupAlgebra b = f2_qd32();
  check_quotient_constants(b, Subgroup::generated_by(b.group(), {b.group().index_of("a")}));
}

TEST_CASE("units: group elements are units, augmentation-zero elements are not (modular)") {
  GroupAlgebra a = f2_qd16();
  for (int g = 0; g < a.dim(); ++g) CHECK(is_unit(a, a.basis(g)));

  AlgebraElement one_plus_a = a.one() + a.basis(a.group().index_of("a"));
  // (1+a)^8 = 1 + a^8 = 0, so 1+a is nilpotent, not a unit
  CHECK(one_plus_a.pow(8).is_zero());
  CHECK(!is_unit(a, one_plus_a));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    AlgebraElement u = random_element(a, rng);
    bool unit = is_unit(a, u);
    CHECK(unit == !augmentation(u).is_zero());
    auto v = inverse(a, u);
    CHECK(v.has_value() == unit);
    if (v) {
      CHECK(u * *v == a.one());
      CHECK(*v * u == a.one());
    }
  }
}

TEST_CASE("regular representation rows are u*g") {
  GroupAlgebra a(Field(3, 1), Group::cyclic(4));
  std::mt19937_64 rng(9);
  AlgebraElement u = random_element(a, rng);
  Mat m = regular_representation(a, u);
  for (int g = 0; g < a.dim(); ++g) CHECK(m[g] == (u * a.basis(g)).coeffs());
}

TEST_CASE("center dimension equals class count for every constructed algebra") {
  std::array<GroupAlgebra, 4> algebras{
      GroupAlgebra(Field(3, 1), Group::quasidihedral(4)),
      GroupAlgebra(Field(5, 1), Group::quasidihedral(5)),
      GroupAlgebra(Field(2, 1), Group::cyclic(3)),
      GroupAlgebra(Field(7, 1), Group::direct_product(Group::cyclic(2), Group::cyclic(2))),
  };
  for (const auto& a : algebras) {
    auto sums = center_basis(a);
    Mat rows;
    for (const auto& s : sums) rows.push_back(s.coeffs());
    CHECK(rank_of(a.field(), a.dim(), rows) == static_cast<int>(sums.size()));
    CHECK(sums.size() == conjugacy_classes(a.group()).size());
  }
}

TEST_CASE("modular inverse of 1+j via the truncated geometric series") {
  GroupAlgebra a = f2_qd16();
  Ideal j = jacobson_radical(a);
  int t = nilpotency_index(j);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement jj = a.zero();
    for (const auto& b : j.basis_elements())
      if (dist(rng)) jj += b;
    AlgebraElement u = a.one() + jj;
    AlgebraElement acc = a.zero();
    AlgebraElement p = a.one();
    for (int i = 0; i < t; ++i) {  // sum over (-j)^i, truncated at the index
      acc += p;
      p *= -jj;
    }
    CHECK(u * acc == a.one());
    CHECK(acc * u == a.one());
  }
}

}  // TEST_SUITE
