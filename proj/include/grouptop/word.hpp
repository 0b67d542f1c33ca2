/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_WORD_HPP
#define GROUPTOP_WORD_HPP

#include <cstdint>
#include <vector>

namespace grouptop {

/// One syllable g^e of a word; e is never zero in a stored word.
struct Syllable {
  std::uint32_t generator;
  std::int64_t exponent;

  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word over abstract generators 0, 1, 2, ... Adjacent
/// syllables always have distinct generators and no syllable has exponent
/// zero; every constructor and operation restores this form, so equality
/// of reduced words is structural equality.
class Word {
 public:
  Word() = default;  ///< the empty (identity) word

  static Word generator(std::uint32_t g, std::int64_t exponent = 1);
  static Word from_syllables(const std::vector<Syllable>& syllables);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  /// Letter count, i.e. the sum of |exponent| over syllables.
  std::uint64_t length() const;

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(std::int64_t n) const;
  /// b^-1 * (*this) * b
  Word conjugated_by(const Word& b) const;
  /// a^-1 b^-1 a b
  static Word commutator(const Word& a, const Word& b);

  /// Largest generator index mentioned, or -1 for the identity.
  std::int64_t max_generator() const;

  bool operator==(const Word&) const = default;

 private:
  void push_reduced(std::uint32_t g, std::int64_t e);

  std::vector<Syllable> syllables_;
};

}  // namespace grouptop

#endif  // GROUPTOP_WORD_HPP
