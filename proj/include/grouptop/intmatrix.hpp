/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_INTMATRIX_HPP
#define GROUPTOP_INTMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace grouptop {

/// Arbitrary-precision integer. All matrix arithmetic in the library is
/// exact; intermediate entries in normal-form computations can exceed any
/// fixed-width type even for small inputs.
using Int = mpz_class;

/// Dense matrix over Int with row-major storage. A 0xN or Nx0 matrix is
/// valid and behaves as the empty matrix of that shape.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Convenience builder for literal test fixtures.
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  /// Exact determinant (fraction-free Bareiss elimination). Requires a
  /// square matrix; the empty 0x0 determinant is 1.
  Int determinant() const;

  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  /// col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// Horizontal concatenation [a | b]; row counts must match.
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
/// Vertical concatenation; column counts must match.
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
/// Matrix-vector product m*x with x.size() == m.cols().
std::vector<Int> matvec(const IntMatrix& m, const std::vector<Int>& x);

/// Smith normal form s = u * m * v with u, v unimodular, s diagonal with
/// non-negative entries d_1 | d_2 | ... and zero diagonal entries trailing.
struct SmithDecomposition {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// The diagonal of the Smith form, padded with the structural zeros
/// (length min(rows, cols)).
std::vector<Int> smith_diagonal(const IntMatrix& m);

/// Repeated exact linear algebra against a fixed matrix: integral solves
/// of m*x = b and an integral kernel basis. Wraps one Smith decomposition.
class SmithSolver {
 public:
  explicit SmithSolver(IntMatrix m);

  const IntMatrix& matrix() const { return m_; }
  const SmithDecomposition& decomposition() const { return snf_; }

  std::size_t rank() const { return rank_; }

  /// Some integral x with m*x = b, or nullopt when none exists.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

  /// Columns form a basis of the integral kernel of m.
  const IntMatrix& kernel_basis() const { return kernel_; }

 private:
  IntMatrix m_;
  SmithDecomposition snf_;
  std::size_t rank_;
  IntMatrix kernel_;
};

}  // namespace grouptop

#endif  // GROUPTOP_INTMATRIX_HPP
