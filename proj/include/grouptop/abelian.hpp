/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_ABELIAN_HPP
#define GROUPTOP_ABELIAN_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grouptop/intmatrix.hpp"
#include "grouptop/presentation.hpp"

namespace grouptop {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
/// Two such groups are isomorphic iff they are equal, so operator== is
/// the isomorphism test.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;  ///< trivial group

  /// From data already in invariant-factor form (validated).
  FgAbelianGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

  /// From an unordered list of cyclic orders (0 meaning an infinite cyclic
  /// summand, 1 summands dropped); canonicalizes via the primary
  /// decomposition.
  static FgAbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Product of the invariant factors (1 for a free or trivial group).
  Int torsion_order() const;

  /// "0", "Z^2", "Z/4 ⊕ Z/12", "Z ⊕ Z/2 ⊕ Z/2", ...
  std::string to_text() const;

  bool operator==(const FgAbelianGroup&) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> factors_;
};

/// Cokernel of the row lattice: the abelian group presented by one column
/// per generator and the matrix rows as relations.
FgAbelianGroup cokernel_of_rows(const IntMatrix& relations,
                                std::size_t generators);

/// Abelianization of a finite presentation (Smith form of the exponent-sum
/// matrix).
FgAbelianGroup abelianization(const Presentation& p);

FgAbelianGroup tensor_product(const FgAbelianGroup& a,
                              const FgAbelianGroup& b);

/// Whether q can be realized as a quotient of g, decided by the padded
/// invariant-factor divisibility criterion.
bool is_quotient_of(const FgAbelianGroup& q, const FgAbelianGroup& g);

/// Per-prime structure of a f.g. abelian group.
struct TorsionDivisibilityReport {
  Int p;
  bool p_divisible;    ///< multiplication by p is surjective
  bool has_p_torsion;  ///< some invariant factor is divisible by p
  bool is_p_group;     ///< finite and every factor is a power of p
  bool is_torsion;     ///< free rank zero
};

/// Requires p prime.
TorsionDivisibilityReport torsion_divisibility(const FgAbelianGroup& g,
                                               const Int& p);

bool is_prime(const Int& n);
/// Prime factorization by trial division, pairs (p, multiplicity), p
/// ascending. Requires n >= 1.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

}  // namespace grouptop

#endif  // GROUPTOP_ABELIAN_HPP
