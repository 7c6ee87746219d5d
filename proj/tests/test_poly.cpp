#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "galgebra/poly.hpp"

using namespace galg;

namespace {

// test-only oracle: factorization by recursive trial division over all monic
// polynomials of at most half the degree, independent of the library pipeline
void oracle_factor(const Polynomial& f, std::map<std::vector<std::int64_t>, int>& out) {
  const Field& F = f.field();
  if (f.degree() < 1) return;
  for (std::int64_t deg = 1; deg <= f.degree() / 2; ++deg) {
    std::int64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= F.order();
    for (std::int64_t label = 0; label < count; ++label) {
      std::vector<FieldElement> c;
      std::int64_t rem = label;
      for (int i = 0; i < deg; ++i) {
        c.push_back(F.from_label(rem % F.order()));
        rem /= F.order();
      }
      c.push_back(F.one());
      Polynomial cand(F, c);
      auto [q, r] = f.divmod(cand);
      if (r.is_zero()) {
        oracle_factor(cand, out);
        oracle_factor(q, out);
        return;
      }
    }
  }
  // no divisor of degree <= deg/2: irreducible
  std::vector<std::int64_t> key;
  Polynomial m = f.monic();
  for (int i = 0; i <= m.degree(); ++i) key.push_back(F.label(m.coeff(i)));
  out[key] += 1;
}

std::map<std::vector<std::int64_t>, int> as_map(const Field& F, const std::vector<PolyFactor>& factors) {
  std::map<std::vector<std::int64_t>, int> m;
  for (const auto& pf : factors) {
    std::vector<std::int64_t> key;
    for (int i = 0; i <= pf.factor.degree(); ++i) key.push_back(F.label(pf.factor.coeff(i)));
    m[key] += pf.multiplicity;
  }
  return m;
}

Polynomial expand(const Field& F, const std::vector<PolyFactor>& factors, const FieldElement& lead) {
  Polynomial acc = Polynomial::constant(F, lead);
  for (const auto& pf : factors)
    for (int i = 0; i < pf.multiplicity; ++i) acc = acc * pf.factor;
  return acc;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("x^2-1 over F_3 splits into (x-1)(x+1)") {
  Field f3(3, 1);
  auto factors = factor(Polynomial::from_ints(f3, {-1, 0, 1}));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].factor == Polynomial::from_ints(f3, {1, 1}));  // x+1
  CHECK(factors[1].factor == Polynomial::from_ints(f3, {2, 1}));  // x+2 = x-1
  CHECK(factors[0].multiplicity == 1);
  CHECK(factors[1].multiplicity == 1);
}

TEST_CASE("x^2+1 is irreducible over F_3") {
  Field f3(3, 1);
  Polynomial f = Polynomial::from_ints(f3, {1, 0, 1});
  for (int r = 0; r < 3; ++r) CHECK(!f.eval(f3.from_int(r)).is_zero());
  auto factors = factor(f);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].factor == f);
  CHECK(factors[0].multiplicity == 1);
  CHECK(is_irreducible(f));
}

TEST_CASE("x^4-1 over F_5 splits into four linear factors") {
  Field f5(5, 1);
  auto factors = factor(Polynomial::from_ints(f5, {-1, 0, 0, 0, 1}));
  REQUIRE(factors.size() == 4);
  for (const auto& pf : factors) {
    CHECK(pf.factor.degree() == 1);
    CHECK(pf.multiplicity == 1);
  }
}

TEST_CASE("factoring zero is an error") {
  Field f3(3, 1);
  CHECK_THROWS_AS(factor(Polynomial(f3)), std::domain_error);
}

TEST_CASE("char-p power case: x^p - 1 = (x-1)^p") {
  Field f3(3, 1);
  auto factors = factor(Polynomial::from_ints(f3, {-1, 0, 0, 1}));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].factor == Polynomial::from_ints(f3, {2, 1}));
  CHECK(factors[0].multiplicity == 3);
}

TEST_CASE("factorization matches the brute-force oracle for q <= 9, deg <= 4") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto [p, n] = prime_power_decompose(q);
    Field F(p, n);
    std::int64_t count = 1;
    for (int i = 0; i < 4; ++i) count *= q;
    for (std::int64_t label = 0; label < count; ++label) {
      std::vector<FieldElement> c;
      std::int64_t rem = label;
      for (int i = 0; i < 4; ++i) {
        c.push_back(F.from_label(rem % q));
        rem /= q;
      }
      c.push_back(F.one());
      Polynomial f(F, c);
      auto factors = factor(f, 7);
      // expanding reproduces the input
      CHECK(expand(F, factors, f.leading()) == f);
      // every factor is irreducible
      for (const auto& pf : factors) CHECK(is_irreducible(pf.factor));
      // matches the oracle as a multiset
      std::map<std::vector<std::int64_t>, int> expect;
      oracle_factor(f, expect);
      CHECK(as_map(F, factors) == expect);
    }
  }
}

TEST_CASE("factor set is independent of the splitting seed") {
  Field f7(7, 1);
  Polynomial f = Polynomial::from_ints(f7, {-1, 0, 0, 0, 0, 0, 1});  // x^6-1, fully split
  auto a = factor(f, 0);
  auto b = factor(f, 12345);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].factor == b[i].factor);
    CHECK(a[i].multiplicity == b[i].multiplicity);
  }
}

TEST_CASE("min_poly conventions") {
  Field f3(3, 1);
  auto id = [](const Vec& v) { return v; };
  SUBCASE("zero vector gives the unit polynomial") {
    Vec z = zero_vec(f3, 4);
    CHECK(min_poly(z, id, f3) == Polynomial::from_ints(f3, {1}));
  }
  SUBCASE("identity map on a nonzero vector gives x - 1") {
    Vec v = zero_vec(f3, 4);
    v[2] = f3.one();
    CHECK(min_poly(v, id, f3) == Polynomial::from_ints(f3, {-1, 1}));
  }
  SUBCASE("a nilpotent shift gives x^k") {
    auto shift = [&](const Vec& v) {
      Vec out = zero_vec(f3, 3);
      for (int i = 0; i + 1 < 3; ++i) out[i + 1] = v[i];
      return out;
    };
    Vec v = zero_vec(f3, 3);
    v[0] = f3.one();
    CHECK(min_poly(v, shift, f3) == Polynomial::from_ints(f3, {0, 0, 0, 1}));
  }
}

TEST_CASE("gcd and mod_inverse") {
  Field f5(5, 1);
  Polynomial a = Polynomial::from_ints(f5, {1, 1});     // x+1
  Polynomial b = Polynomial::from_ints(f5, {2, 3, 1});  // (x+1)(x+2)
  CHECK(gcd(a * a, b) == a);
  Polynomial m = Polynomial::from_ints(f5, {1, 0, 1});
  Polynomial u = mod_inverse(a, m);
  CHECK((a * u) % m == Polynomial::from_ints(f5, {1}));
}

}  // TEST_SUITE
