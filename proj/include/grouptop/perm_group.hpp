/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_PERM_GROUP_HPP
#define GROUPTOP_PERM_GROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "grouptop/abelian.hpp"
#include "grouptop/coset_table.hpp"
#include "grouptop/word.hpp"

namespace grouptop {

/// Permutation of {0, ..., n-1} as the image vector; p[i] is where i goes.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::uint32_t degree);
/// First a, then b: (a*b)[i] = b[a[i]].
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_conjugate(const Perm& a, const Perm& g);  ///< g^-1 a g
std::uint64_t perm_order(const Perm& a);

constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Finite permutation group given by generators. Element enumeration is
/// exhaustive (breadth-first products), capped to keep accidental infinite
/// or huge groups from running away; the cap throws a Resource error.
class PermutationGroup {
 public:
  PermutationGroup(std::uint32_t degree, std::vector<Perm> generators);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// All elements, sorted lexicographically. Computed once and cached.
  const std::vector<Perm>& elements(std::size_t cap = kDefaultElementCap) const;
  std::uint64_t order(std::size_t cap = kDefaultElementCap) const;
  bool contains(const Perm& p, std::size_t cap = kDefaultElementCap) const;

  /// Image of a word in the generators.
  Perm image_of_word(const Word& w) const;

 private:
  std::uint32_t degree_;
  std::vector<Perm> generators_;
  mutable std::vector<Perm> elements_;  // empty until first use
  mutable bool closed_ = false;
};

/// The action of a finitely presented group read off a closed coset
/// table; faithful and regular when the table was built for the trivial
/// subgroup.
PermutationGroup to_permutation_group(const CosetTable& t);

/// Subgroup of an ambient group: a small generating set plus the sorted
/// element list (always fully enumerated).
struct Subgroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;

  std::uint64_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
  bool is_trivial() const { return elements.size() <= 1; }
};

/// Subgroup generated by the given elements of g.
Subgroup generated_subgroup(const PermutationGroup& g,
                            const std::vector<Perm>& gens,
                            std::size_t cap = kDefaultElementCap);

/// Smallest normal subgroup of g containing the seeds.
Subgroup normal_closure(const PermutationGroup& g,
                        const std::vector<Perm>& seeds,
                        std::size_t cap = kDefaultElementCap);

/// Lower central and derived series data, each descending from the whole
/// group and stopping when one step repeats (or reaches the trivial
/// subgroup).
struct SubgroupSeries {
  std::vector<Subgroup> lower_central;  ///< G = G_1 >= [G, G_i] ...
  std::vector<Subgroup> derived;        ///< G >= [G, G] >= ...
  bool nilpotent;
  bool solvable;
  std::optional<std::size_t> nilpotency_class;
  std::optional<std::size_t> derived_length;
};

SubgroupSeries subgroup_series(const PermutationGroup& g,
                               std::size_t cap = kDefaultElementCap);

/// Whether n is normal in g (n must be a subgroup of g).
bool is_normal(const PermutationGroup& g, const Subgroup& n,
               std::size_t cap = kDefaultElementCap);

/// Deterministic right-coset bookkeeping for a subgroup n <= g: each coset
/// is named by its lexicographically least element.
class CosetIndexer {
 public:
  CosetIndexer(const PermutationGroup& g, const Subgroup& n,
               std::size_t cap = kDefaultElementCap);

  std::size_t size() const { return reps_.size(); }
  const Perm& rep(std::size_t i) const { return reps_[i]; }
  std::size_t index_of(const Perm& p) const;

 private:
  std::vector<Perm> subgroup_elements_;
  std::vector<Perm> reps_;
};

/// The action of g on the right cosets of a normal subgroup n; the image
/// is isomorphic to g/n and has one point per coset.
PermutationGroup quotient_action(const PermutationGroup& g, const Subgroup& n,
                                 std::size_t cap = kDefaultElementCap);

/// Invariant factors of the abelian quotient g/n computed directly from
/// the group elements (independent of any presentation): generators of
/// g/n with all relations read off its Cayley graph.  The quotient must
/// be abelian; a Domain error is raised otherwise.
FgAbelianGroup quotient_abelian_invariants(const PermutationGroup& g,
                                           const Subgroup& n,
                                           std::size_t cap = kDefaultElementCap);

}  // namespace grouptop

#endif  // GROUPTOP_PERM_GROUP_HPP
