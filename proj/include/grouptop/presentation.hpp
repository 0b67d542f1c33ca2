/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_PRESENTATION_HPP
#define GROUPTOP_PRESENTATION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouptop/intmatrix.hpp"
#include "grouptop/word.hpp"

namespace grouptop {

/// Finite presentation: named generators plus freely reduced relator words
/// whose generator indices refer to the name list. The empty presentation
/// (no generators, no relators) presents the trivial group and is valid.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators);

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::optional<std::uint32_t> generator_index(std::string_view name) const;

  /// Renders in the same syntax parse_presentation accepts, e.g.
  /// "< r, s | r^4, s^2, s*r*s^-1*r >". Parsing the result reproduces the
  /// presentation exactly.
  std::string to_text() const;

  /// Word rendered over this presentation's generator names ("1" for the
  /// identity).
  std::string word_text(const Word& w) const;

  /// Parses a word expression (same syntax as relators) over this
  /// presentation's generators.
  Word parse_word(std::string_view text) const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Parses presentation text. Accepts either a bare "< gens | relators >"
/// or a file of named blocks "name := < ... >"; in the latter case
/// `block` selects the entry (empty selects a lone block, or errors when
/// several are present).
Presentation parse_presentation(std::string_view text,
                                std::string_view block = {});

struct NamedPresentation {
  std::string name;  ///< empty for a bare unnamed presentation
  Presentation presentation;
};

/// All presentations in a file, in order of appearance.
std::vector<NamedPresentation> parse_presentation_file(std::string_view text);

/// Exponent-sum matrix of the relators: one row per relator, one column
/// per generator. Its integer cokernel is the abelianization.
IntMatrix abelianized_relation_matrix(const Presentation& p);

/// Same group with the given words forced trivial (appended as relators).
Presentation quotient_presentation(const Presentation& p,
                                   const std::vector<Word>& killers);

/// Pushout of p1 <- a -> p2 along generator images: the disjoint union of
/// the two presentations plus one relator image1[g] * image2[g]^-1 per
/// generator g of a. The images are taken on trust; whether they define
/// homomorphisms from the group of `a` is not (and cannot in general be)
/// certified here. Colliding generator names from p2 get a numeric suffix.
Presentation amalgamated_product(const Presentation& p1,
                                 const Presentation& p2,
                                 const Presentation& a,
                                 const std::vector<Word>& images1,
                                 const std::vector<Word>& images2);

/// Pushout over the trivial group.
Presentation free_product(const Presentation& p1, const Presentation& p2);

}  // namespace grouptop

#endif  // GROUPTOP_PRESENTATION_HPP
