#pragma once

#include <string>
#include <vector>

#include "mgstill/rational.hpp"

namespace mgstill {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  /// row_i += c * row_j
  void add_row(int i, int j, const BigInt& c);
  /// col_i += c * col_j
  void add_col(int i, int j, const BigInt& c);

  /// Exact determinant (Bareiss fraction-free elimination). Square only.
  BigInt determinant() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

/// Smith normal form: u * input * v == d with u, v unimodular and d diagonal,
/// nonnegative, with d11 | d22 | ... . `invariants` lists the nonzero diagonal.
struct SnfResult {
  IntMatrix u, d, v;
  int rank = 0;
  std::vector<BigInt> invariants;
};

SnfResult smith_normal_form(const IntMatrix& input);

}  // namespace mgstill
