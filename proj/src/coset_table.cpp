/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "grouptop/error.hpp"

namespace grouptop {

namespace {

constexpr std::int64_t kUndef = -1;

// HLT enumerator: scan every relator at every live coset, filling gaps
// with fresh cosets; merge cosets whenever two traces of the same relator
// disagree. The table is kept symmetric at all times (an entry a -c-> b
// always has its mirror b -c^-1-> a), which lets coincidence processing
// find every stale reference by walking the dead coset's own row.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup,
             std::size_t max_cosets)
      : ngens_(p.generator_count()), max_(max_cosets) {
    if (max_ < 1 ||
        max_ > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()) - 1)
      throw Error(ErrorKind::Domain, "max_cosets out of range");
    for (const Word& r : p.relators()) relators_.push_back(columns_of(r));
    for (const Word& w : subgroup) {
      if (w.max_generator() >= static_cast<std::int64_t>(ngens_))
        throw Error(ErrorKind::Domain,
                    "subgroup word mentions a generator outside the presentation");
      subgroup_.push_back(columns_of(w));
    }
  }

  struct Result {
    std::size_t count;
    std::vector<std::uint32_t> flat;
    std::size_t high_water;
  };

  Result run() {
    allocate();  // coset 0 = the subgroup itself
    for (const auto& w : subgroup_) scan_and_fill(0, w);
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(static_cast<std::uint32_t>(alpha), r);
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (std::size_t c = 0; c < 2 * ngens_; ++c)
        if (entry(alpha, c) == kUndef) {
          reserve_one();
          if (!alive(alpha)) break;
          if (entry(alpha, c) != kUndef) continue;
          std::size_t fresh = allocate();
          link(alpha, c, fresh);
        }
    }
    return standardize();
  }

 private:
  static std::size_t col(std::uint32_t g, bool inverse) {
    return 2 * static_cast<std::size_t>(g) + (inverse ? 1 : 0);
  }
  static std::size_t invcol(std::size_t c) { return c ^ 1; }

  std::vector<std::size_t> columns_of(const Word& w) const {
    std::vector<std::size_t> cols;
    for (const Syllable& s : w.syllables()) {
      std::size_t c = col(s.generator, s.exponent < 0);
      std::int64_t k = s.exponent < 0 ? -s.exponent : s.exponent;
      for (std::int64_t i = 0; i < k; ++i) cols.push_back(c);
    }
    return cols;
  }

  std::int64_t& entry(std::size_t coset, std::size_t c) {
    return table_[coset * 2 * ngens_ + c];
  }
  std::int64_t entry(std::size_t coset, std::size_t c) const {
    return ngens_ == 0 ? kUndef : table_[coset * 2 * ngens_ + c];
  }

  bool alive(std::size_t x) const { return parent_[x] == x; }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::size_t allocate() {
    std::size_t id = parent_.size();
    parent_.push_back(id);
    table_.resize(table_.size() + 2 * ngens_, kUndef);
    ++live_;
    high_water_ = std::max(high_water_, live_);
    return id;
  }

  void link(std::size_t a, std::size_t c, std::size_t b) {
    entry(a, c) = static_cast<std::int64_t>(b);
    entry(b, invcol(c)) = static_cast<std::int64_t>(a);
  }

  // Guarantees room for one more coset, shedding dead weight via a
  // deduction-only pass over the whole table first if needed.
  void reserve_one() {
    if (live_ < max_) return;
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& r : relators_) {
        scan_no_fill(alpha, r);
        if (!alive(alpha)) break;
      }
    }
    if (live_ >= max_) {
      std::ostringstream os;
      os << "coset enumeration exceeded max_cosets=" << max_
         << " (high water " << high_water_ << ", " << parent_.size()
         << " cosets defined); raise the cap to continue";
      throw Error(ErrorKind::Resource, os.str());
    }
  }

  // Traces word w from alpha. Forward stops at position i with coset f;
  // backward stops at position j with coset b, never crossing i. A gap of
  // zero is a coincidence, a gap of one a deduction; wider gaps allocate
  // one coset and rescan (fill = true) or give up (fill = false).
  void scan(std::size_t alpha, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return;
    for (;;) {
      alpha = find(alpha);
      std::size_t f = alpha, i = 0;
      while (i < w.size() && entry(f, w[i]) != kUndef)
        f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == w.size()) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      std::size_t b = alpha, j = w.size();
      while (j > i && entry(b, invcol(w[j - 1])) != kUndef)
        b = static_cast<std::size_t>(entry(b, invcol(w[--j])));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        link(f, w[i], b);
        return;
      }
      if (!fill) return;
      if (live_ >= max_) {
        // Deduction-only pass may merge cosets (or throw); either way the
        // positions f, i, b, j are stale, so rescan before allocating.
        reserve_one();
        continue;
      }
      std::size_t fresh = allocate();
      link(f, w[i], fresh);
    }
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    scan(alpha, w, true);
  }
  void scan_no_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    scan(alpha, w, false);
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& dead) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --live_;
    dead.push_back(b);
  }

  // Transfers each dead coset's row onto its survivor, erasing the mirror
  // entries so nothing in the table references a dead coset afterwards.
  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      std::size_t gamma = dead.front();
      dead.pop_front();
      for (std::size_t c = 0; c < 2 * ngens_; ++c) {
        std::int64_t delta_raw = entry(gamma, c);
        if (delta_raw == kUndef) continue;
        std::size_t delta = static_cast<std::size_t>(delta_raw);
        entry(delta, invcol(c)) = kUndef;
        std::size_t mu = find(gamma);
        std::size_t nu = find(delta);
        if (entry(mu, c) != kUndef)
          merge(nu, static_cast<std::size_t>(entry(mu, c)), dead);
        else if (entry(nu, invcol(c)) != kUndef)
          merge(mu, static_cast<std::size_t>(entry(nu, invcol(c))), dead);
        else
          link(mu, c, nu);
      }
    }
  }

  Result standardize() {
    std::vector<std::uint32_t> number(parent_.size(),
                                      std::numeric_limits<std::uint32_t>::max());
    std::vector<std::size_t> order;
    std::size_t root = find(0);
    number[root] = 0;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::size_t x = order[head];
      for (std::size_t c = 0; c < 2 * ngens_; ++c) {
        std::int64_t t = entry(x, c);
        if (t == kUndef)
          throw Error(ErrorKind::Domain, "coset table failed to close");
        std::size_t y = static_cast<std::size_t>(t);
        if (number[y] == std::numeric_limits<std::uint32_t>::max()) {
          number[y] = static_cast<std::uint32_t>(order.size());
          order.push_back(y);
        }
      }
    }
    Result out;
    out.count = order.size();
    out.high_water = high_water_;
    out.flat.resize(order.size() * 2 * ngens_);
    for (std::size_t n = 0; n < order.size(); ++n)
      for (std::size_t c = 0; c < 2 * ngens_; ++c)
        out.flat[n * 2 * ngens_ + c] =
            number[static_cast<std::size_t>(entry(order[n], c))];
    return out;
  }

  std::size_t ngens_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::size_t>> subgroup_;
  std::vector<std::int64_t> table_;
  std::vector<std::size_t> parent_;
  std::size_t live_ = 0;
  std::size_t high_water_ = 0;
};

}  // namespace

std::uint32_t CosetTable::action(std::uint32_t coset, std::uint32_t gen) const {
  if (coset >= count_ || gen >= names_.size())
    throw Error(ErrorKind::Domain, "coset table index out of range");
  return flat_[coset * 2 * names_.size() + 2 * gen];
}

std::uint32_t CosetTable::inverse_action(std::uint32_t coset,
                                         std::uint32_t gen) const {
  if (coset >= count_ || gen >= names_.size())
    throw Error(ErrorKind::Domain, "coset table index out of range");
  return flat_[coset * 2 * names_.size() + 2 * gen + 1];
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  std::uint32_t x = coset;
  for (const Syllable& s : w.syllables()) {
    std::int64_t k = s.exponent < 0 ? -s.exponent : s.exponent;
    for (std::int64_t i = 0; i < k; ++i)
      x = s.exponent < 0 ? inverse_action(x, s.generator)
                         : action(x, s.generator);
  }
  return x;
}

std::string CosetTable::to_csv() const {
  std::ostringstream os;
  os << "coset";
  for (const std::string& n : names_) os << "," << n << "," << n << "^-1";
  os << "\n";
  for (std::size_t i = 0; i < count_; ++i) {
    os << i;
    for (std::size_t c = 0; c < 2 * names_.size(); ++c)
      os << "," << flat_[i * 2 * names_.size() + c];
    os << "\n";
  }
  return os.str();
}

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_generators,
                        std::size_t max_cosets) {
  Enumerator e(p, subgroup_generators, max_cosets);
  Enumerator::Result r = e.run();
  CosetTable out;
  out.count_ = r.count;
  out.names_ = p.generator_names();
  out.flat_ = std::move(r.flat);
  out.high_water_ = r.high_water;
  return out;
}

}  // namespace grouptop
