#ifndef GALGEBRA_ALGEBRA_HPP
#define GALGEBRA_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <vector>

#include "galgebra/gf.hpp"
#include "galgebra/group.hpp"
#include "galgebra/linalg.hpp"

namespace galg {

class AlgebraElement;

/// Group algebra F_q G: coefficient vectors over the group basis, multiplied
/// through the group's table (the structure constants are 0/1 permutation
/// slices). Immutable shared handle.
class GroupAlgebra {
 public:
  GroupAlgebra(Field f, Group g);

  const Field& field() const { return rep_->field; }
  const Group& group() const { return rep_->group; }
  int dim() const { return rep_->group.size(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  /// The group element g as a basis vector.
  AlgebraElement basis(int g) const;
  AlgebraElement from_coeffs(Vec coeffs) const;

  bool operator==(const GroupAlgebra& other) const;
  bool operator!=(const GroupAlgebra& other) const { return !(*this == other); }

 private:
  struct Rep {
    Field field;
    Group group;
  };
  std::shared_ptr<const Rep> rep_;
};

/// Element of a group algebra; equality is coefficient-wise.
class AlgebraElement {
 public:
  AlgebraElement(GroupAlgebra a, Vec c);

  const GroupAlgebra& algebra() const { return alg_; }
  const Vec& coeffs() const { return c_; }
  bool is_zero() const { return is_zero_vec(c_); }

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  /// Convolution product through the group table. Cross-algebra operands are
  /// an error.
  AlgebraElement& operator*=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }
  AlgebraElement operator*(const FieldElement& s) const;

  bool operator==(const AlgebraElement& rhs) const;
  bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }

  AlgebraElement pow(std::int64_t e) const;  // e >= 0

 private:
  GroupAlgebra alg_;
  Vec c_;
};

/// Coefficient sum; a ring homomorphism onto F_q whose kernel is the
/// augmentation ideal.
FieldElement augmentation(const AlgebraElement& u);

/// Two-sided ideal stored as a reduced row-echelon basis of the spanned
/// subspace. Closure under multiplication by every group basis element on
/// both sides is verified at construction.
class Ideal {
 public:
  static Ideal zero(const GroupAlgebra& a);
  /// Row space of the given elements, verified two-sided.
  static Ideal span_of(const GroupAlgebra& a, const std::vector<AlgebraElement>& gens);

  const GroupAlgebra& algebra() const { return alg_; }
  const RowSpace& space() const { return space_; }
  int rank() const { return space_.rank(); }
  bool is_zero() const { return space_.rank() == 0; }
  bool contains(const AlgebraElement& u) const { return space_.contains(u.coeffs()); }
  std::vector<AlgebraElement> basis_elements() const;
  bool two_sided() const { return two_sided_; }

  bool operator==(const Ideal& other) const { return space_ == other.space_; }
  bool operator!=(const Ideal& other) const { return !(*this == other); }

 private:
  Ideal(GroupAlgebra a, RowSpace s);
  GroupAlgebra alg_;
  RowSpace space_;
  bool two_sided_ = true;
};

/// Augmentation ideal of the whole algebra, rank |G|-1.
Ideal omega_fg(const GroupAlgebra& a);
/// Two-sided ideal generated by {h-1 : h in N} for normal N, realized as the
/// row space of {(h-1)g}.
Ideal omega_n(const GroupAlgebra& a, const Subgroup& n);

/// Row space of pairwise basis products.
Ideal ideal_product(const Ideal& i, const Ideal& k);
/// Least t with I^t = 0; the zero ideal has index 1. Throws when the ideal is
/// not nilpotent (t would exceed dim+1).
int nilpotency_index(const Ideal& i);

/// Class sums, one per conjugacy class, in class order; each verified central.
std::vector<AlgebraElement> center_basis(const GroupAlgebra& a);

/// Jacobson radical in the two supported regimes: omega(FG) when G is a
/// p-group in characteristic p, the zero ideal when p does not divide |G|.
/// Any other case is rejected as out of scope.
Ideal jacobson_radical(const GroupAlgebra& a);

/// J(F_q H) lifted to the whole algebra: row space of J(F_q H) * F_q G.
Ideal radical_lift(const GroupAlgebra& a, const Subgroup& h);
/// Whether J(F_q H) * F_q G equals J(F_q G), both sides computed
/// independently. Requires H normal with index invertible in F_q.
bool radical_subgroup_consistency(const GroupAlgebra& a, const Subgroup& h);

/// Quotient algebra A/I on a fixed complement basis (the non-pivot group
/// basis columns of the ideal's echelon form).
class QuotientAlgebra {
 public:
  QuotientAlgebra(GroupAlgebra a, Ideal i);

  const GroupAlgebra& algebra() const { return alg_; }
  const Ideal& ideal() const { return ideal_; }
  int dim() const { return static_cast<int>(section_.size()); }
  /// Group-basis indices carrying the complement (section) basis.
  const std::vector<int>& section_columns() const { return section_; }

  /// Coordinates of u + I in the section basis.
  Vec project(const AlgebraElement& u) const;
  /// Representative in A with the given section coordinates.
  AlgebraElement section(const Vec& coords) const;
  /// Product in the quotient, in section coordinates.
  Vec mul(const Vec& a, const Vec& b) const;
  Vec one() const;

 private:
  GroupAlgebra alg_;
  Ideal ideal_;
  std::vector<int> section_;
};

QuotientAlgebra quotient_algebra(const GroupAlgebra& a, const Ideal& i);

/// Left-multiplication matrix of u in the group basis; row j holds the
/// coefficients of u * g_j.
Mat regular_representation(const GroupAlgebra& a, const AlgebraElement& u);
/// A unit iff the left-multiplication matrix has full rank.
bool is_unit(const GroupAlgebra& a, const AlgebraElement& u);
/// Two-sided inverse when it exists.
std::optional<AlgebraElement> inverse(const GroupAlgebra& a, const AlgebraElement& u);

}  // namespace galg

#endif
