/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/word.hpp"

#include <algorithm>

namespace grouptop {

void Word::push_reduced(std::uint32_t g, std::int64_t e) {
  if (e == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == g) {
    syllables_.back().exponent += e;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({g, e});
}

Word Word::generator(std::uint32_t g, std::int64_t exponent) {
  Word w;
  w.push_reduced(g, exponent);
  return w;
}

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
  Word w;
  for (const Syllable& s : syllables) w.push_reduced(s.generator, s.exponent);
  return w;
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const Syllable& s : syllables_)
    n += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.push_reduced(it->generator, -it->exponent);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (const Syllable& s : rhs.syllables_) w.push_reduced(s.generator, s.exponent);
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0) return Word();
  Word base = n > 0 ? *this : inverse();
  std::int64_t k = n > 0 ? n : -n;
  if (syllables_.size() == 1) {
    const Syllable& s = base.syllables_.front();
    return generator(s.generator, s.exponent * k);
  }
  Word w;
  for (std::int64_t i = 0; i < k; ++i) w = w * base;
  return w;
}

Word Word::conjugated_by(const Word& b) const {
  return b.inverse() * *this * b;
}

Word Word::commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::int64_t Word::max_generator() const {
  std::int64_t m = -1;
  for (const Syllable& s : syllables_)
    m = std::max(m, static_cast<std::int64_t>(s.generator));
  return m;
}

}  // namespace grouptop
