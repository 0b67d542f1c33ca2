/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_COSET_TABLE_HPP
#define GROUPTOP_COSET_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grouptop/presentation.hpp"

namespace grouptop {

/// Closed coset table for a subgroup H of a finitely presented group G:
/// the right action of every generator (and inverse) on the cosets
/// H=0, 1, ..., n-1. Numbering is canonical: cosets appear in the order
/// reached by a breadth-first walk from H through the generator columns,
/// so equal (G, H) inputs always produce the identical table.
class CosetTable {
 public:
  std::size_t coset_count() const { return count_; }
  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }

  std::uint32_t action(std::uint32_t coset, std::uint32_t gen) const;
  std::uint32_t inverse_action(std::uint32_t coset, std::uint32_t gen) const;

  /// Image of a coset under a word (right action).
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;

  /// One line per coset: "coset,g,g^-1,..." with a header row.
  std::string to_csv() const;

  /// Number of cosets that were simultaneously live at the enumeration's
  /// peak (diagnostic; >= coset_count()).
  std::size_t high_water() const { return high_water_; }

 private:
  friend CosetTable todd_coxeter(const Presentation&, const std::vector<Word>&,
                                 std::size_t);
  std::size_t count_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> flat_;  // count_ x (2 * ngens), row-major
  std::size_t high_water_ = 0;
};

constexpr std::size_t kDefaultMaxCosets = 200'000;

/// Enumerates the cosets of the subgroup generated by `subgroup_generators`
/// (empty list: the trivial subgroup, i.e. the elements of G). Throws a
/// Resource error carrying the high-water mark when more than `max_cosets`
/// cosets would be live at once; a resource failure says nothing about
/// whether the index is actually infinite.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_generators,
                        std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace grouptop

#endif  // GROUPTOP_COSET_TABLE_HPP
