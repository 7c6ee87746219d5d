#include <doctest.h>

#include <set>
#include <vector>

#include "galgebra/unitgrp.hpp"
#include "galgebra/poly.hpp"
#include "galgebra/wedderburn.hpp"

using namespace galg;

namespace {

GroupAlgebra qd16_over(std::int64_t p, int n = 1) { return GroupAlgebra(Field(p, n), Group::quasidihedral(4)); }
GroupAlgebra qd32_over(std::int64_t p, int n = 1) { return GroupAlgebra(Field(p, n), Group::quasidihedral(5)); }

std::multiset<int> dims_of(const IdempotentDecomposition& d) {
  return {d.component_dims.begin(), d.component_dims.end()};
}
std::multiset<int> degs_of(const IdempotentDecomposition& d) {
  return {d.field_degrees.begin(), d.field_degrees.end()};
}

// brute-force oracle: count invertible 2x2 matrices over F_3 by enumerating
// all 81 and testing the determinant
int count_gl2_f3() {
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if ((a * d - b * c) % 3 != 0) ++count;
  return count;
}

}  // namespace

TEST_SUITE("wedderburn") {

TEST_CASE("t_group residue sets") {
  CHECK(t_group(7, 16) == std::vector<std::int64_t>{1, 7});
  CHECK(t_group(3, 8) == std::vector<std::int64_t>{1, 3});
  CHECK(t_group(17, 8) == std::vector<std::int64_t>{1});
  CHECK(t_group(9, 8) == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(t_group(4, 8), std::invalid_argument);
}

TEST_CASE("f-conjugacy class counts for QD_16 across residues") {
  Group g = Group::quasidihedral(4);
  std::vector<std::pair<std::int64_t, int>> expect = {{3, 7},  {5, 6},  {7, 6},  {9, 7},  {11, 7}, {13, 6},
                                                      {17, 7}, {19, 7}, {23, 6}, {25, 7}, {27, 7}, {29, 6}};
  for (auto [q, c] : expect) {
    FConjPartition fc = f_conjugacy(g, prime_power_decompose(q).first, q);
    CHECK(fc.m == 8);
    CHECK(fc.class_count() == c);
  }
  // q = -1 mod 8 merges the two rotation classes into {a, a^3, a^5, a^7}
  FConjPartition fc7 = f_conjugacy(g, 7, 7);
  bool found = false;
  for (const auto& cls : fc7.classes) {
    std::set<std::string> names;
    for (int e : cls) names.insert(g.name(e));
    if (names == std::set<std::string>{"a", "a^3", "a^5", "a^7"}) found = true;
  }
  CHECK(found);
}

TEST_CASE("f-conjugacy class counts for QD_32 across residues") {
  Group g = Group::quasidihedral(5);
  std::vector<std::pair<std::int64_t, int>> expect = {{3, 7},  {5, 7},   {7, 11},  {9, 9},  {11, 7},
                                                      {13, 7}, {17, 11}, {23, 11}, {25, 9}, {31, 9}};
  for (auto [q, c] : expect) {
    FConjPartition fc = f_conjugacy(g, prime_power_decompose(q).first, q);
    CHECK(fc.m == 16);
    CHECK(fc.class_count() == c);
  }
  // q = 3 mod 16 fuses all odd rotations into one class of size 8
  FConjPartition fc3 = f_conjugacy(g, 3, 3);
  bool found = false;
  for (const auto& cls : fc3.classes)
    if (cls.size() == 8 && g.name(cls[0]) == "a") found = true;
  CHECK(found);
}

TEST_CASE("modular p-group case: one p-regular class") {
  FConjPartition fc = f_conjugacy(Group::quasidihedral(4), 2, 2);
  CHECK(fc.m == 1);
  CHECK(fc.class_count() == 1);
}

TEST_CASE("central idempotents of F_3[QD_16]") {
  auto dec = central_idempotents(qd16_over(3));
  REQUIRE(dec.idempotents.size() == 7);
  CHECK(dims_of(dec) == std::multiset<int>{1, 1, 1, 1, 4, 4, 4});
  CHECK(degs_of(dec) == std::multiset<int>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("central idempotents of F_7[QD_16]") {
  auto dec = central_idempotents(qd16_over(7));
  REQUIRE(dec.idempotents.size() == 6);
  CHECK(dims_of(dec) == std::multiset<int>{1, 1, 1, 1, 4, 8});
  CHECK(degs_of(dec) == std::multiset<int>{1, 1, 1, 1, 1, 2});
}

TEST_CASE("trivial group has the single idempotent 1") {
  GroupAlgebra a(Field(5, 1), Group::cyclic(1));
  auto dec = central_idempotents(a);
  REQUIRE(dec.idempotents.size() == 1);
  CHECK(dec.idempotents[0] == a.one());
}

TEST_CASE("central idempotents reject the modular case") {
  CHECK_THROWS_AS(central_idempotents(qd16_over(2)), std::domain_error);
}

TEST_CASE("wedderburn shapes for the reference algebras") {
  CHECK(wedderburn_shape(qd16_over(3)) == WedderburnShape{{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 1}, {2, 1}, {2, 1}}});
  CHECK(wedderburn_shape(qd32_over(3)) == WedderburnShape{{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 1}, {2, 2}, {2, 4}}});
  CHECK(wedderburn_shape(qd32_over(17)) ==
        WedderburnShape{{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}}});
}

TEST_CASE("idempotent identities hold exactly and the set is seed-independent") {
  for (std::int64_t q : {3, 7}) {
    GroupAlgebra a = qd16_over(q);
    auto dec0 = central_idempotents(a, 0);
    auto dec1 = central_idempotents(a, 999);
    REQUIRE(dec0.idempotents.size() == dec1.idempotents.size());
    for (std::size_t i = 0; i < dec0.idempotents.size(); ++i)
      CHECK(dec0.idempotents[i] == dec1.idempotents[i]);  // canonical order, so this is set equality
    AlgebraElement sum = a.zero();
    for (const auto& e : dec0.idempotents) {
      CHECK(e * e == e);
      sum += e;
      for (int g = 0; g < a.dim(); ++g) CHECK(e * a.basis(g) == a.basis(g) * e);
    }
    CHECK(sum == a.one());
  }
}

TEST_CASE("dimension identities across the q matrix") {
  for (int k : {4, 5}) {
    for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
      auto [p, n] = prime_power_decompose(q);
      GroupAlgebra a(Field(p, n), Group::quasidihedral(k));
      auto dec = central_idempotents(a);
      int dim_sum = 0, deg_sum = 0;
      for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
        dim_sum += dec.component_dims[i];
        deg_sum += dec.field_degrees[i];
      }
      CHECK(dim_sum == a.dim());
      CHECK(deg_sum == static_cast<int>(conjugacy_classes(a.group()).size()));
    }
  }
}

TEST_CASE("commutative component count equals the idempotent count of F_q[G/G']") {
  for (std::int64_t q : {3, 7}) {
    GroupAlgebra a = qd16_over(q);
    auto shape = wedderburn_shape(a);
    int commutative = 0;
    for (const auto& c : shape.components)
      if (c.n == 1) ++commutative;
    auto qg = quotient(a.group(), commutator_subgroup(a.group()));
    GroupAlgebra qa(a.field(), qg.group);
    CHECK(commutative == static_cast<int>(central_idempotents(qa).idempotents.size()));
  }
}

TEST_CASE("l-values and the lcm criterion") {
  CHECK(l_value(3, 16) == 4);   // q = 3 mod 16
  CHECK(l_value(7, 8) == 2);    // q = -1 mod 8
  CHECK(l_value(17, 8) == 1);   // q = 1 mod m
  CHECK(l_value(3, 8) == 1);    // q = 3 mod 8 fixes every class
  CHECK(l_value(31, 16) == 2);  // q = -1 mod 16
  CHECK_THROWS_AS(l_value(4, 8), std::invalid_argument);

  for (std::int64_t q : {3, 5, 7, 9, 11, 13, 17}) {
    auto [p, n] = prime_power_decompose(q);
    CHECK(l_value(q, 8) == lcm_noncommutative_degrees(wedderburn_shape(qd16_over(p, n))));
  }
}

TEST_CASE("unit group orders") {
  CHECK(unit_group_order(WedderburnShape{{{1, 1}}}, 5) == 4);
  CHECK(gl_order(2, 3) == count_gl2_f3());  // 48 by the brute-force matrix count
  CHECK(unit_group_order(wedderburn_shape(qd16_over(3)), 3) == BigInt(1769472));  // 2^4 * 48^3
}

TEST_CASE("min poly of multiplication by the class sum of a^4 in F_3[QD_16]") {
  GroupAlgebra a = qd16_over(3);
  AlgebraElement z = a.basis(a.group().index_of("a^4"));  // singleton class sum
  auto step = [&](const Vec& v) { return (a.from_coeffs(v) * z).coeffs(); };
  Polynomial m = min_poly(a.one().coeffs(), step, a.field());
  Polynomial target = Polynomial::from_ints(a.field(), {-1, 0, 1});  // x^2 - 1
  CHECK(m == target);
  CHECK((target % m).is_zero());
}

TEST_CASE("witt-berman crosscheck across both groups") {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13, 17}) {
    auto [p, n] = prime_power_decompose(q);
    CHECK(witt_berman_crosscheck(qd16_over(p, n)));
  }
  CHECK(witt_berman_crosscheck(qd32_over(7)));
  // abelian C_2 over F_3: c = 2 = idempotent count
  GroupAlgebra c2(Field(3, 1), Group::cyclic(2));
  CHECK(witt_berman_crosscheck(c2));
  CHECK(central_idempotents(c2).idempotents.size() == 2);
}

}  // TEST_SUITE
