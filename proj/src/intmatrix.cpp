/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/intmatrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "grouptop/error.hpp"

namespace grouptop {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw Error(ErrorKind::Domain, "ragged rows in matrix literal");
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::Domain, "matrix product shape mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw Error(ErrorKind::Domain, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorKind::Domain, "hcat row count mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw Error(ErrorKind::Domain, "vcat column count mismatch");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      m.at(a.rows() + i, j) = b.at(i, j);
  }
  return m;
}

std::vector<Int> matvec(const IntMatrix& m, const std::vector<Int>& x) {
  if (x.size() != m.cols())
    throw Error(ErrorKind::Domain, "matrix-vector shape mismatch");
  std::vector<Int> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

namespace {

// Integer quotient rounded to nearest, so |a - q*b| <= |b|/2.
Int rounded_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int r2 = 2 * abs(r);
  if (r2 > abs(b)) {
    if (sgn(a) == sgn(b))
      q += 1;
    else
      q -= 1;
  }
  return q;
}

// Elementary row/column reduction to Smith form, mirroring every operation
// into the accumulated transforms so that s = u * m * v holds throughout.
struct SmithWorker {
  IntMatrix a, u, v;

  explicit SmithWorker(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
  }
  void row_sub(std::size_t dst, std::size_t src, const Int& q) {
    a.add_row_multiple(dst, src, -q);
    u.add_row_multiple(dst, src, -q);
  }
  void col_sub(std::size_t dst, std::size_t src, const Int& q) {
    a.add_col_multiple(dst, src, -q);
    v.add_col_multiple(dst, src, -q);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
  }

  void run() {
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!select_pivot(t)) break;
      reduce_block(t);
      if (a.at(t, t) < 0) negate_row(t);
    }
  }

  // Moves a smallest-magnitude nonzero entry of the trailing block to
  // (t, t). Returns false when the block is entirely zero.
  bool select_pivot(std::size_t t) {
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < abs(a.at(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) return false;
    swap_rows(t, pi);
    swap_cols(t, pj);
    return true;
  }

  void reduce_block(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = rounded_quotient(a.at(i, t), a.at(t, t));
        if (q != 0) row_sub(i, t, q);
        if (a.at(i, t) != 0) {
          // Remainder is strictly smaller than the pivot; promote it.
          swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = rounded_quotient(a.at(t, j), a.at(t, t));
        if (q != 0) col_sub(j, t, q);
        if (a.at(t, j) != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot now alone in its row and column; force it to divide the
      // rest of the block so the diagonal forms a divisibility chain.
      for (std::size_t i = t + 1; i < a.rows() && !dirty; ++i)
        for (std::size_t j = t + 1; j < a.cols() && !dirty; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_sub(t, i, Int(-1));
            dirty = true;
          }
      if (!dirty) return;
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithWorker w(m);
  w.run();
  return SmithDecomposition{std::move(w.a), std::move(w.u), std::move(w.v)};
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Int> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d.s.at(i, i);
  return diag;
}

SmithSolver::SmithSolver(IntMatrix m)
    : m_(std::move(m)), snf_(smith_normal_form(m_)) {
  std::size_t n = std::min(m_.rows(), m_.cols());
  rank_ = 0;
  while (rank_ < n && snf_.s.at(rank_, rank_) != 0) ++rank_;
  kernel_ = IntMatrix(m_.cols(), m_.cols() - rank_);
  for (std::size_t j = rank_; j < m_.cols(); ++j)
    for (std::size_t i = 0; i < m_.cols(); ++i)
      kernel_.at(i, j - rank_) = snf_.v.at(i, j);
}

std::optional<std::vector<Int>> SmithSolver::solve(
    const std::vector<Int>& b) const {
  if (b.size() != m_.rows())
    throw Error(ErrorKind::Domain, "solve right-hand side shape mismatch");
  std::vector<Int> y = matvec(snf_.u, b);
  std::vector<Int> z(m_.cols());
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (i < rank_) {
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y[i].get_mpz_t(),
                  snf_.s.at(i, i).get_mpz_t());
      if (r != 0) return std::nullopt;
      z[i] = q;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return matvec(snf_.v, z);
}

}  // namespace grouptop
