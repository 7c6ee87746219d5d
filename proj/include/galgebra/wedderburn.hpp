#ifndef GALGEBRA_WEDDERBURN_HPP
#define GALGEBRA_WEDDERBURN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "galgebra/algebra.hpp"

namespace galg {

using BigInt = boost::multiprecision::cpp_int;

/// Residues {q^s mod m : s >= 0}, sorted. Requires gcd(q, m) = 1.
std::vector<std::int64_t> t_group(std::int64_t q, std::int64_t m);

/// Partition of the p-regular elements into F-conjugacy classes: orbits of
/// g -> h^{-1} g^t h over h in G and t in the T-group of q modulo m, where m
/// is the lcm of the p-regular element orders. For a semisimple algebra the
/// class count equals the number of simple components (Witt-Berman).
struct FConjPartition {
  std::int64_t m;
  std::vector<std::int64_t> t_residues;
  std::vector<std::vector<int>> classes;  // sorted by least member
  int class_count() const { return static_cast<int>(classes.size()); }
};
FConjPartition f_conjugacy(const Group& g, std::int64_t p, std::int64_t q);

/// One matrix component M(n, F_{q^d}).
struct WedderburnComponent {
  int n;
  int d;
  bool operator==(const WedderburnComponent&) const = default;
};

/// Multiset of components, sorted by (d, n).
struct WedderburnShape {
  std::vector<WedderburnComponent> components;
  bool operator==(const WedderburnShape&) const = default;
};

/// Complete set of primitive central idempotents of a semisimple group
/// algebra, found by iteratively splitting blocks along factors of the
/// minimal polynomials of projected class sums (CRT projectors). The set is
/// independent of the factorization seed; the list is sorted canonically.
struct IdempotentDecomposition {
  std::vector<AlgebraElement> idempotents;
  std::vector<int> component_dims;  // dim A*e_i = n_i^2 d_i
  std::vector<int> field_degrees;   // dim centre*e_i = d_i
};
IdempotentDecomposition central_idempotents(const GroupAlgebra& a, std::uint64_t seed = 0);

/// Shape derived from the idempotent data: d_i = dim centre*e_i and
/// n_i = sqrt(dim A*e_i / d_i), with the square checked exactly.
WedderburnShape wedderburn_shape(const GroupAlgebra& a, std::uint64_t seed = 0);
WedderburnShape shape_from_decomposition(const IdempotentDecomposition& dec);

/// Least l >= 1 such that the q^l-power map fixes every conjugacy class of a
/// quasidihedral group with rotation order m, i.e. q^l ≡ 1 or m/2 - 1 (mod m).
/// Equals lcm{[K_i : F_q]} over the simple components. Requires even m >= 4
/// and gcd(q, m) = 1.
int l_value(std::int64_t q, std::int64_t m);

/// lcm of the d_i over components with n_i > 1 (1 when there are none).
std::int64_t lcm_noncommutative_degrees(const WedderburnShape& shape);

/// |GL(n, Q)| = prod_{t<n} (Q^n - Q^t).
BigInt gl_order(int n, const BigInt& q_power);
/// Unit-group order of the semisimple algebra with the given shape over F_q.
BigInt unit_group_order(const WedderburnShape& shape, std::int64_t q);

/// Whether the F-conjugacy class count and the idempotent count agree (two
/// independent computations of the number of simple components).
bool witt_berman_crosscheck(const GroupAlgebra& a, std::uint64_t seed = 0);

}  // namespace galg

#endif
