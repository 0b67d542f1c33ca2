/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/lattice.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include "grouptop/error.hpp"

namespace grouptop {

namespace {

/// Relation rows presenting N/D on the numerator's generator coordinates:
/// one row per denominator generator (its expression in the numerator
/// generators) plus the numerator's own kernel (distinct generator
/// expressions of the same lattice vector).
IntMatrix quotient_relations(const SmithSolver& numerator,
                             const IntMatrix& denominator) {
  std::size_t k = numerator.matrix().cols();
  std::vector<std::vector<Int>> rows;
  for (std::size_t j = 0; j < denominator.cols(); ++j) {
    auto coords = numerator.solve(denominator.column(j));
    if (!coords)
      throw Error(ErrorKind::Domain,
                  "denominator lattice is not contained in the numerator");
    rows.push_back(std::move(*coords));
  }
  const IntMatrix& kernel = numerator.kernel_basis();
  for (std::size_t j = 0; j < kernel.cols(); ++j)
    rows.push_back(kernel.column(j));
  IntMatrix m(rows.size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
  return m;
}

/// Columns of src mapped through f, assembled as a matrix.
IntMatrix map_columns(const LatticeMap& f, const IntMatrix& src) {
  IntMatrix out(f.mat.rows(), src.cols());
  for (std::size_t j = 0; j < src.cols(); ++j) {
    std::vector<Int> y = apply_map(f, src.column(j));
    for (std::size_t i = 0; i < y.size(); ++i) out.at(i, j) = y[i];
  }
  return out;
}

/// Every column of candidates lies in the lattice spanned by the columns
/// behind the solver.
bool columns_contained(const SmithSolver& lattice, const IntMatrix& candidates) {
  for (std::size_t j = 0; j < candidates.cols(); ++j)
    if (!lattice.solve(candidates.column(j))) return false;
  return true;
}

}  // namespace

LatticeQuotient::LatticeQuotient(std::size_t ambient, IntMatrix numerator,
                                 IntMatrix denominator)
    : ambient_(ambient),
      numerator_solver_(std::move(numerator)),
      denominator_solver_(std::move(denominator)) {
  if (numerator_solver_.matrix().rows() != ambient_ ||
      denominator_solver_.matrix().rows() != ambient_)
    throw Error(ErrorKind::Domain,
                "lattice generators do not match the ambient dimension");
  group_ = cokernel_of_rows(
      quotient_relations(numerator_solver_, denominator_solver_.matrix()),
      numerator_solver_.matrix().cols());
}

bool LatticeQuotient::contains(const std::vector<Int>& x) const {
  return numerator_solver_.solve(x).has_value();
}

bool LatticeQuotient::is_zero_class(const std::vector<Int>& x) const {
  return denominator_solver_.solve(x).has_value();
}

std::vector<Int> apply_map(const LatticeMap& f, const std::vector<Int>& x) {
  std::vector<Int> y = matvec(f.mat, x);
  if (f.divisor == 1) return y;
  for (Int& v : y) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(),
                f.divisor.get_mpz_t());
    if (r != 0)
      throw Error(ErrorKind::Domain,
                  "lattice map division is not exact; the map does not "
                  "restrict to this lattice");
    v = q;
  }
  return y;
}

ExactnessSlot check_exactness(const LatticeQuotient& l, const LatticeMap& f,
                              const LatticeQuotient& m, const LatticeMap& g,
                              const LatticeQuotient& n) {
  ExactnessSlot slot;

  // Image of f: denominator of m extended by the mapped numerator of l.
  IntMatrix mapped = map_columns(f, l.numerator());
  IntMatrix image_gens = hcat(m.denominator(), mapped);
  slot.image =
      LatticeQuotient(m.ambient(), image_gens, m.denominator()).group();

  // Kernel of g: coordinates c with g(N_m c) inside divisor * D_n.  The
  // divisor is folded into the right-hand side so exactness of the
  // division is part of the solvability condition.
  IntMatrix scaled_dn = n.denominator();
  for (std::size_t i = 0; i < scaled_dn.rows(); ++i)
    for (std::size_t j = 0; j < scaled_dn.cols(); ++j)
      scaled_dn.at(i, j) *= -g.divisor;
  IntMatrix stacked = hcat(g.mat * m.numerator(), scaled_dn);
  SmithSolver stacked_solver(std::move(stacked));
  const IntMatrix& solutions = stacked_solver.kernel_basis();
  IntMatrix coeffs(m.numerator().cols(), solutions.cols());
  for (std::size_t i = 0; i < coeffs.rows(); ++i)
    for (std::size_t j = 0; j < coeffs.cols(); ++j)
      coeffs.at(i, j) = solutions.at(i, j);
  IntMatrix kernel_gens = hcat(m.denominator(), m.numerator() * coeffs);
  slot.kernel =
      LatticeQuotient(m.ambient(), kernel_gens, m.denominator()).group();

  slot.exact = columns_contained(SmithSolver(kernel_gens), image_gens) &&
               columns_contained(SmithSolver(image_gens), kernel_gens);
  return slot;
}

}  // namespace grouptop
