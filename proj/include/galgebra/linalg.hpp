#ifndef GALGEBRA_LINALG_HPP
#define GALGEBRA_LINALG_HPP

#include <vector>

#include "galgebra/gf.hpp"

namespace galg {

using Vec = std::vector<FieldElement>;
using Mat = std::vector<Vec>;

Vec zero_vec(const Field& f, int n);
bool is_zero_vec(const Vec& v);
Vec add(Vec a, const Vec& b);
Vec sub(Vec a, const Vec& b);
Vec scale(Vec a, const FieldElement& c);

/// Row space of a set of vectors, canonicalized as a reduced row echelon
/// basis. Two subspaces are equal iff their bases compare equal.
class RowSpace {
 public:
  RowSpace(Field f, int ncols);  // zero subspace
  static RowSpace from_rows(const Field& f, int ncols, const Mat& rows);

  const Field& field() const { return field_; }
  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Eliminates v against the basis; the residual is zero iff v lies in the
  /// span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  /// Inserts a row, keeping reduced echelon form. Returns true if the rank
  /// grew.
  bool insert(Vec v);

  /// Column indices without a pivot; the corresponding unit vectors form a
  /// complement of the row space.
  std::vector<int> complement_columns() const;

  bool operator==(const RowSpace& other) const;
  bool operator!=(const RowSpace& other) const { return !(*this == other); }

 private:
  Field field_;
  int ncols_;
  Mat basis_;                // reduced echelon rows, pivot columns increasing
  std::vector<int> pivots_;  // pivot column per basis row
};

int rank_of(const Field& f, int ncols, const Mat& rows);
/// Rank of a square matrix equals its size.
bool is_invertible(const Field& f, const Mat& square);

/// Solves M x = b for square M by Gaussian elimination; empty result when M is
/// singular.
Vec solve(const Field& f, Mat m, Vec b);

}  // namespace galg

#endif
