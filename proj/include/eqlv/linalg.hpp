#pragma once

#include <optional>
#include <vector>

#include "eqlv/laurent.hpp"
#include "eqlv/poly.hpp"

namespace eqlv {

/// Dense matrix over a finite field, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr F, int rows, int cols) : F_(std::move(F)), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static Mat identity(FieldPtr F, int n);
  /// Matrix whose columns are the given vectors.
  static Mat from_columns(FieldPtr F, int rows, const std::vector<std::vector<Elem>>& cols);

  const FieldPtr& field() const { return F_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
  Elem at(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }
  std::vector<Elem> column(int j) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;
  Mat scale(Elem c) const;
  Mat transpose() const;
  Mat lift(const FieldPtr& big) const;
  bool is_zero() const;

  int rank() const;
  Elem det() const;
  std::optional<Mat> inverse() const;
  /// Basis of the null space, as columns.
  Mat kernel() const;
  /// Basis of the column space (a subset of the columns, in order).
  Mat column_basis() const;
  /// Some x with A x = b.
  std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const;
  /// X with A X = B (columnwise), when solvable.
  std::optional<Mat> solve(const Mat& B) const;

 private:
  FieldPtr F_;
  int r_ = 0, c_ = 0;
  std::vector<Elem> a_;
};

/// Row-reduces in place and returns the pivot columns.
std::vector<int> rref(Mat& A);
/// det(t I - A).
Poly charpoly(const Mat& A);
/// Matrix of T on the T-stable subspace spanned by the columns of `basis`.
Mat restrict_to(const Mat& T, const Mat& basis);
/// Columns of A and B together.
Mat hcat(const Mat& A, const Mat& B);
/// Intersection of two column spaces (basis as columns).
Mat intersect(const Mat& A, const Mat& B);
/// Characteristic polynomial of the map induced by T on V / span(sub), where sub is T-stable.
Poly quotient_charpoly(const Mat& T, const Mat& sub);

/// Square matrix with polynomial entries.
using PolyMat = std::vector<std::vector<Poly>>;
/// Determinant over F[t] by fraction-free elimination.
Poly det(const PolyMat& M);

/// Square matrix with Laurent entries.
using LaurentMat = std::vector<std::vector<Laurent>>;
/// Determinant over F((1/t)) by elimination with largest-leading-term pivots.
Laurent det(LaurentMat M);

}  // namespace eqlv
