/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_LATTICE_HPP
#define GROUPTOP_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "grouptop/abelian.hpp"
#include "grouptop/intmatrix.hpp"

namespace grouptop {

/// Subquotient N / D of the free lattice Z^ambient.  The numerator N and
/// denominator D are column-generated sublattices with D contained in N
/// (validated on construction); elements are integer vectors of the
/// ambient length and the quotient is a finitely generated abelian group.
///
/// This is the common substrate for (co)homology over Z and Z/n: cycles
/// over Z/n are integer vectors whose boundary lands in n times the next
/// lattice, and boundaries pick up n times the ambient basis, so one
/// integral quotient covers every coefficient choice.
class LatticeQuotient {
 public:
  LatticeQuotient(std::size_t ambient, IntMatrix numerator,
                  IntMatrix denominator);

  std::size_t ambient() const { return ambient_; }
  const IntMatrix& numerator() const { return numerator_solver_.matrix(); }
  const IntMatrix& denominator() const { return denominator_solver_.matrix(); }

  /// Canonical form of the quotient group.
  const FgAbelianGroup& group() const { return group_; }

  /// Membership of the ambient vector x in the numerator lattice.
  bool contains(const std::vector<Int>& x) const;
  /// Whether x represents the zero class (lies in the denominator).
  bool is_zero_class(const std::vector<Int>& x) const;

 private:
  std::size_t ambient_;
  SmithSolver numerator_solver_;
  SmithSolver denominator_solver_;
  FgAbelianGroup group_;
};

/// Integer-linear map x -> (mat * x) / divisor between ambient spaces.
/// The division must come out exact on every vector the map is applied
/// to; connecting homomorphisms are the motivating case (divide a
/// coboundary by the coefficient modulus).
struct LatticeMap {
  IntMatrix mat;
  Int divisor = 1;
};

/// Applies f to x; Domain error if the division is not exact.
std::vector<Int> apply_map(const LatticeMap& f, const std::vector<Int>& x);

/// Verdict for one slot of a (long) exact sequence l -f-> m -g-> n:
/// whether image of f equals kernel of g inside m, with both subgroups
/// reported in canonical form.
struct ExactnessSlot {
  bool exact = false;
  FgAbelianGroup image;   ///< (D_m + f(N_l)) / D_m
  FgAbelianGroup kernel;  ///< {x in N_m : g(x) in D_n} / D_m
};

/// Exactness at m.  Shapes: f.mat is ambient(m) x ambient(l), g.mat is
/// ambient(n) x ambient(m).  A zero-ambient l with a column-free f plays
/// the role of an incoming zero map; a zero-ambient n with a row-free g
/// plays the outgoing one.
ExactnessSlot check_exactness(const LatticeQuotient& l, const LatticeMap& f,
                              const LatticeQuotient& m, const LatticeMap& g,
                              const LatticeQuotient& n);

}  // namespace grouptop

#endif  // GROUPTOP_LATTICE_HPP
