#pragma once

#include <vector>

#include "latspan/bigint.hpp"

namespace latspan {

/// Dense integer matrix with arbitrary-precision entries, row major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  bool operator==(const IntMat&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

IntMat matmul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Zero pivots are
/// repaired by swapping with the first lower row holding a nonzero entry.
/// The empty matrix has determinant 1.
BigInt bareiss_determinant(IntMat m);

/// Canonical column-style Hermite form of the column span of m: pivots step
/// down with positive values, entries left of a pivot are reduced into
/// [0, pivot), and zero columns are dropped. Two matrices with the same
/// column span produce identical output.
IntMat hermite_column_form(IntMat m);

/// left * a * right = diag(factors) with factors[i] | factors[i+1] and both
/// transforms unimodular. Requires a square and nonsingular.
struct SmithDecomposition {
  IntMat left;
  IntMat right;
  std::vector<BigInt> factors;
};

SmithDecomposition smith_normal_form(const IntMat& a);

}  // namespace latspan
