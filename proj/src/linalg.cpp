#include "galgebra/linalg.hpp"

#include <stdexcept>

namespace galg {

Vec zero_vec(const Field& f, int n) { return Vec(n, f.zero()); }

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec scale(Vec a, const FieldElement& c) {
  for (auto& x : a) x *= c;
  return a;
}

RowSpace::RowSpace(Field f, int ncols) : field_(std::move(f)), ncols_(ncols) {}

RowSpace RowSpace::from_rows(const Field& f, int ncols, const Mat& rows) {
  RowSpace s(f, ncols);
  for (const auto& r : rows) s.insert(r);
  return s;
}

Vec RowSpace::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ncols_) throw std::invalid_argument("vector/row-space width mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElement& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    FieldElement factor = c;  // basis rows are normalized to pivot 1
    for (int j = pivots_[i]; j < ncols_; ++j) v[j] -= factor * basis_[i][j];
  }
  return v;
}

bool RowSpace::insert(Vec v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < ncols_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  FieldElement li = inv(v[pivot]);
  for (int j = pivot; j < ncols_; ++j) v[j] *= li;
  // back-substitute into existing rows, keep rows ordered by pivot
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    FieldElement c = basis_[i][pivot];
    if (c.is_zero()) continue;
    for (int j = pivot; j < ncols_; ++j) basis_[i][j] -= c * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  basis_.insert(basis_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

std::vector<int> RowSpace::complement_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int j = 0; j < ncols_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j)
      ++k;
    else
      out.push_back(j);
  }
  return out;
}

bool RowSpace::operator==(const RowSpace& other) const {
  if (ncols_ != other.ncols_ || pivots_ != other.pivots_) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (int j = 0; j < ncols_; ++j)
      if (basis_[i][j] != other.basis_[i][j]) return false;
  return true;
}

int rank_of(const Field& f, int ncols, const Mat& rows) {
  return RowSpace::from_rows(f, ncols, rows).rank();
}

bool is_invertible(const Field& f, const Mat& square) {
  if (square.empty()) return true;
  return rank_of(f, static_cast<int>(square[0].size()), square) == static_cast<int>(square.size());
}

Vec solve(const Field&, Mat m, Vec b) {
  int n = static_cast<int>(m.size());
  for (int col = 0, row = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return {};  // singular
    std::swap(m[piv], m[row]);
    std::swap(b[piv], b[row]);
    FieldElement li = inv(m[row][col]);
    for (int j = col; j < n; ++j) m[row][j] *= li;
    b[row] *= li;
    for (int i = 0; i < n; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      FieldElement c = m[i][col];
      for (int j = col; j < n; ++j) m[i][j] -= c * m[row][j];
      b[i] -= c * b[row];
    }
    ++row;
  }
  for (int i = 0; i < n; ++i)
    if (m[i][i].is_zero()) return {};
  return b;
}

}  // namespace galg
