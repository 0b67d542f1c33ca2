/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_REDUCTION_HPP
#define GROUPTOP_REDUCTION_HPP

#include <cstdint>
#include <vector>

#include "grouptop/abelian.hpp"
#include "grouptop/perm_group.hpp"
#include "grouptop/presentation.hpp"

namespace grouptop {

/// Quotient of g by the normal closure of every nonidentity element whose
/// order factors entirely over the given primes.  The prime list must be
/// nonempty and each entry prime (Domain error otherwise).  When none of
/// the primes divide |g| the result is g itself up to isomorphism (the
/// regular image of g).
PermutationGroup torsion_kill_step(const PermutationGroup& g,
                                   const std::vector<Int>& primes,
                                   std::size_t cap = kDefaultElementCap);

/// One pass of the reduction loop: the group it started from, what its
/// abelianization looked like, which primes were fed to the kill step and
/// how many elements the step removed.
struct ReductionStep {
  std::uint64_t order;
  FgAbelianGroup abelianization;
  std::vector<Int> primes_used;   ///< empty on the terminal step
  std::uint64_t killed_count;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  ///< never empty; orders strictly decrease
  std::uint64_t terminal_order;
};

/// Repeatedly kill the torsion primes visible in the abelianization until
/// it becomes trivial.  Solvable groups reach the trivial group; perfect
/// groups stop immediately with a nontrivial terminal order (a trace of
/// length one).
ReductionTrace solvable_reduction(const PermutationGroup& g,
                                  std::size_t cap = kDefaultElementCap);

/// Exhaustive certificate that commutation induces a well-defined
/// epimorphism (gamma_i / gamma_{i+1}) (x) (g / [g,g]) ->>
/// gamma_{i+1} / gamma_{i+2} on the lower central series.  The witness
/// table maps a coset of gamma_{i+1} in gamma_i (row) and a coset of
/// [g,g] in g (column) to the coset of the commutator in
/// gamma_{i+1} / gamma_{i+2}; well_defined records that the value never
/// depended on the choice of representatives.
struct TensorEpimorphismCheck {
  std::size_t level = 0;
  bool well_defined = false;
  bool surjective = false;
  FgAbelianGroup level_quotient;  ///< gamma_level / gamma_{level+1}
  FgAbelianGroup abelianized;     ///< g / [g, g]
  FgAbelianGroup next_quotient;   ///< gamma_{level+1} / gamma_{level+2}
  std::vector<std::vector<std::size_t>> witness;
};

TensorEpimorphismCheck lcs_tensor_epimorphism_check(
    const PermutationGroup& g, std::size_t level,
    std::size_t cap = kDefaultElementCap);

/// For nilpotent groups, a prime-power abelianization forces the whole
/// group to be a p-group; this records both sides and whether the
/// implication held.  consistent is false only when g is nilpotent, its
/// abelianization is a p-group, and g itself is not.
struct PropagationCheck {
  Int p;
  bool nilpotent = false;
  bool ab_is_p_group = false;
  bool g_is_p_group = false;
  bool consistent = false;
};

PropagationCheck property_propagation_check(const PermutationGroup& g,
                                            const Int& p,
                                            std::size_t cap = kDefaultElementCap);

/// Per-prime half of the torsion classification: whether the group has
/// p-torsion, whether it is p-divisible (x -> x^p onto), whether its
/// abelianization has p-torsion, and whether the dichotomy
/// "not p-divisible, or p-torsion survives abelianization" held.
struct PrimeClassification {
  Int p;
  bool tor_p_nontrivial = false;
  bool p_divisible = false;
  bool tor_p_ab_nontrivial = false;
  bool condition_met = false;
};

struct TorsionClassification {
  std::uint64_t order = 0;
  bool is_torsion = false;
  FgAbelianGroup abelianization;
  std::vector<PrimeClassification> per_prime;  ///< one row per prime dividing |g|
};

TorsionClassification classify_torsion_divisibility(
    const PermutationGroup& g, std::size_t cap = kDefaultElementCap);

/// Same classification starting from a presentation: the group is first
/// realized through coset enumeration on the trivial subgroup.
TorsionClassification classify_torsion_divisibility(
    const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets,
    std::size_t cap = kDefaultElementCap);

}  // namespace grouptop

#endif  // GROUPTOP_REDUCTION_HPP
