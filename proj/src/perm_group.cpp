/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "grouptop/error.hpp"

namespace grouptop {

Perm perm_identity(std::uint32_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

Perm perm_conjugate(const Perm& a, const Perm& g) {
  return perm_compose(perm_inverse(g), perm_compose(a, g));
}

std::uint64_t perm_order(const Perm& a) {
  std::uint64_t ord = 1;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = a[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

namespace {

void check_perm(const Perm& p, std::uint32_t degree) {
  if (p.size() != degree)
    throw Error(ErrorKind::Domain, "permutation degree mismatch");
  std::vector<bool> hit(degree, false);
  for (std::uint32_t v : p) {
    if (v >= degree || hit[v])
      throw Error(ErrorKind::Domain, "not a permutation");
    hit[v] = true;
  }
}

// Breadth-first monoid closure; for finite groups this is the subgroup
// generated (every generator has finite order, so inverses appear).
std::vector<Perm> close_under_products(std::uint32_t degree,
                                       const std::vector<Perm>& gens,
                                       std::size_t cap) {
  std::set<Perm> seen;
  seen.insert(perm_identity(degree));
  std::vector<const Perm*> queue{&*seen.begin()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Perm current = *queue[head];  // copy: set iterators stay valid anyway
    for (const Perm& g : gens) {
      Perm next = perm_compose(current, g);
      auto [it, fresh] = seen.insert(std::move(next));
      if (fresh) {
        if (seen.size() > cap) {
          std::ostringstream os;
          os << "element enumeration exceeded cap " << cap;
          throw Error(ErrorKind::Resource, os.str());
        }
        queue.push_back(&*it);
      }
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

// Greedy generating-set reduction: keep an element only if it is not
// already generated. Each kept element at least doubles the span, so few
// closures run.
std::vector<Perm> reduce_generators(std::uint32_t degree,
                                    const std::vector<Perm>& elements,
                                    std::size_t cap) {
  std::vector<Perm> kept;
  std::vector<Perm> span{perm_identity(degree)};
  for (const Perm& e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    kept.push_back(e);
    span = close_under_products(degree, kept, cap);
  }
  return kept;
}

}  // namespace

PermutationGroup::PermutationGroup(std::uint32_t degree,
                                   std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0)
    throw Error(ErrorKind::Domain, "permutation group needs degree >= 1");
  for (const Perm& p : generators_) check_perm(p, degree_);
}

const std::vector<Perm>& PermutationGroup::elements(std::size_t cap) const {
  if (!closed_) {
    elements_ = close_under_products(degree_, generators_, cap);
    closed_ = true;
  }
  return elements_;
}

std::uint64_t PermutationGroup::order(std::size_t cap) const {
  return elements(cap).size();
}

bool PermutationGroup::contains(const Perm& p, std::size_t cap) const {
  const std::vector<Perm>& all = elements(cap);
  return std::binary_search(all.begin(), all.end(), p);
}

Perm PermutationGroup::image_of_word(const Word& w) const {
  Perm img = perm_identity(degree_);
  for (const Syllable& s : w.syllables()) {
    if (s.generator >= generators_.size())
      throw Error(ErrorKind::Domain, "word mentions a missing generator");
    Perm step = s.exponent < 0 ? perm_inverse(generators_[s.generator])
                               : generators_[s.generator];
    std::int64_t k = s.exponent < 0 ? -s.exponent : s.exponent;
    for (std::int64_t i = 0; i < k; ++i) img = perm_compose(img, step);
  }
  return img;
}

PermutationGroup to_permutation_group(const CosetTable& t) {
  std::uint32_t degree = static_cast<std::uint32_t>(t.coset_count());
  std::vector<Perm> gens;
  for (std::uint32_t g = 0; g < t.generator_count(); ++g) {
    Perm p(degree);
    for (std::uint32_t c = 0; c < degree; ++c) p[c] = t.action(c, g);
    gens.push_back(std::move(p));
  }
  return PermutationGroup(degree, std::move(gens));
}

bool Subgroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

Subgroup generated_subgroup(const PermutationGroup& g,
                            const std::vector<Perm>& gens, std::size_t cap) {
  for (const Perm& p : gens)
    if (!g.contains(p, cap))
      throw Error(ErrorKind::Domain, "subgroup seed outside the group");
  Subgroup s;
  s.elements = close_under_products(g.degree(), gens, cap);
  s.generators = reduce_generators(g.degree(), s.elements, cap);
  return s;
}

Subgroup normal_closure(const PermutationGroup& g,
                        const std::vector<Perm>& seeds, std::size_t cap) {
  std::vector<Perm> conjugators;
  for (const Perm& x : g.generators()) {
    conjugators.push_back(x);
    conjugators.push_back(perm_inverse(x));
  }
  std::set<Perm> orbit;
  std::vector<Perm> queue;
  for (const Perm& s : seeds)
    if (orbit.insert(s).second) queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Perm current = queue[head];
    for (const Perm& x : conjugators) {
      Perm conj = perm_conjugate(current, x);
      if (orbit.insert(conj).second) {
        if (orbit.size() > cap)
          throw Error(ErrorKind::Resource,
                      "conjugate orbit exceeded element cap");
        queue.push_back(std::move(conj));
      }
    }
  }
  return generated_subgroup(g, std::vector<Perm>(orbit.begin(), orbit.end()),
                            cap);
}

namespace {

std::vector<Perm> generator_commutators(const std::vector<Perm>& a,
                                        const std::vector<Perm>& b) {
  std::vector<Perm> out;
  for (const Perm& x : a)
    for (const Perm& y : b) {
      Perm c = perm_compose(perm_inverse(x),
                            perm_compose(perm_inverse(y), perm_compose(x, y)));
      out.push_back(std::move(c));
    }
  return out;
}

Subgroup whole_group(const PermutationGroup& g, std::size_t cap) {
  Subgroup s;
  s.elements = g.elements(cap);
  s.generators = g.generators();
  return s;
}

}  // namespace

SubgroupSeries subgroup_series(const PermutationGroup& g, std::size_t cap) {
  SubgroupSeries out;
  Subgroup whole = whole_group(g, cap);

  out.lower_central.push_back(whole);
  for (;;) {
    const Subgroup& prev = out.lower_central.back();
    if (prev.is_trivial()) break;
    Subgroup next = normal_closure(
        g, generator_commutators(prev.generators, g.generators()), cap);
    if (next.elements == prev.elements) break;
    out.lower_central.push_back(std::move(next));
  }
  out.nilpotent = out.lower_central.back().is_trivial();
  out.nilpotency_class =
      out.nilpotent ? std::optional<std::size_t>(out.lower_central.size() - 1)
                    : std::nullopt;

  out.derived.push_back(whole);
  for (;;) {
    const Subgroup& prev = out.derived.back();
    if (prev.is_trivial()) break;
    Subgroup next = normal_closure(
        g, generator_commutators(prev.generators, prev.generators), cap);
    if (next.elements == prev.elements) break;
    out.derived.push_back(std::move(next));
  }
  out.solvable = out.derived.back().is_trivial();
  out.derived_length =
      out.solvable ? std::optional<std::size_t>(out.derived.size() - 1)
                   : std::nullopt;
  return out;
}

bool is_normal(const PermutationGroup& g, const Subgroup& n, std::size_t cap) {
  for (const Perm& h : n.generators)
    if (!g.contains(h, cap))
      throw Error(ErrorKind::Domain, "subgroup not inside the group");
  for (const Perm& x : g.generators()) {
    Perm xi = perm_inverse(x);
    for (const Perm& h : n.generators) {
      if (!n.contains(perm_conjugate(h, x))) return false;
      if (!n.contains(perm_conjugate(h, xi))) return false;
    }
  }
  return true;
}

CosetIndexer::CosetIndexer(const PermutationGroup& g, const Subgroup& n,
                           std::size_t cap)
    : subgroup_elements_(n.elements) {
  std::set<Perm> reps;
  for (const Perm& e : g.elements(cap)) {
    // Canonical name of the right coset Ne: its least element.
    Perm least = e;
    for (const Perm& m : subgroup_elements_) {
      Perm cand = perm_compose(m, e);
      if (cand < least) least = cand;
    }
    reps.insert(std::move(least));
  }
  reps_.assign(reps.begin(), reps.end());
}

std::size_t CosetIndexer::index_of(const Perm& p) const {
  if (reps_.empty() || p.size() != reps_.front().size())
    throw Error(ErrorKind::Domain, "element outside the indexed group");
  Perm least = p;
  for (const Perm& m : subgroup_elements_) {
    Perm cand = perm_compose(m, p);
    if (cand < least) least = cand;
  }
  auto it = std::lower_bound(reps_.begin(), reps_.end(), least);
  if (it == reps_.end() || *it != least)
    throw Error(ErrorKind::Domain, "element outside the indexed group");
  return static_cast<std::size_t>(it - reps_.begin());
}

PermutationGroup quotient_action(const PermutationGroup& g, const Subgroup& n,
                                 std::size_t cap) {
  if (!is_normal(g, n, cap))
    throw Error(ErrorKind::Domain, "quotient requires a normal subgroup");
  CosetIndexer idx(g, n, cap);
  std::uint32_t degree = static_cast<std::uint32_t>(idx.size());
  std::vector<Perm> gens;
  for (const Perm& x : g.generators()) {
    Perm q(degree);
    for (std::size_t i = 0; i < idx.size(); ++i)
      q[i] = static_cast<std::uint32_t>(idx.index_of(perm_compose(idx.rep(i), x)));
    gens.push_back(std::move(q));
  }
  return PermutationGroup(degree, std::move(gens));
}

FgAbelianGroup quotient_abelian_invariants(const PermutationGroup& g,
                                           const Subgroup& n,
                                           std::size_t cap) {
  PermutationGroup q = quotient_action(g, n, cap);
  const std::vector<Perm>& qgens = q.generators();
  for (std::size_t i = 0; i < qgens.size(); ++i)
    for (std::size_t j = i + 1; j < qgens.size(); ++j)
      if (perm_compose(qgens[i], qgens[j]) != perm_compose(qgens[j], qgens[i]))
        throw Error(ErrorKind::Domain, "quotient is not abelian");
  // q is abelian and acts regularly on its points (the stabilizer of the
  // identity coset is the subgroup itself, which collapses to the
  // identity); read the relation lattice of its generators off the Cayley
  // graph: the spanning tree assigns an exponent vector to every element,
  // and every non-tree edge closes a cycle contributing one relation row.
  std::size_t k = qgens.size();
  std::vector<std::vector<Int>> rows;
  std::vector<std::optional<std::vector<Int>>> vec(q.degree());
  vec[0] = std::vector<Int>(k, 0);
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t state = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t to = qgens[i][state];
      std::vector<Int> step = *vec[state];
      step[i] += 1;
      if (!vec[to]) {
        vec[to] = std::move(step);
        queue.push_back(to);
      } else {
        std::vector<Int> relation = step;
        for (std::size_t j = 0; j < k; ++j) relation[j] -= (*vec[to])[j];
        rows.push_back(std::move(relation));
      }
    }
  }
  if (queue.size() != q.degree())
    throw Error(ErrorKind::Domain, "quotient action is not transitive");
  IntMatrix m(rows.size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
  return cokernel_of_rows(m, k);
}

}  // namespace grouptop
