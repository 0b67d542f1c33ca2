/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "grouptop/coset_table.hpp"
#include "grouptop/error.hpp"

namespace grouptop {

namespace {

Perm perm_commutator(const Perm& a, const Perm& b) {
  return perm_compose(perm_compose(perm_inverse(a), perm_inverse(b)),
                      perm_compose(a, b));
}

Subgroup commutator_subgroup(const PermutationGroup& g, std::size_t cap) {
  std::vector<Perm> seeds;
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators()) seeds.push_back(perm_commutator(a, b));
  return normal_closure(g, seeds, cap);
}

FgAbelianGroup element_abelianization(const PermutationGroup& g,
                                      std::size_t cap) {
  return quotient_abelian_invariants(g, commutator_subgroup(g, cap), cap);
}

/// Distinct primes dividing any invariant factor, ascending.
std::vector<Int> torsion_primes(const FgAbelianGroup& a) {
  std::set<Int> primes;
  for (const Int& d : a.invariant_factors())
    for (const auto& [p, e] : factorize(d)) primes.insert(p);
  return std::vector<Int>(primes.begin(), primes.end());
}

/// Nonidentity elements whose order has all its prime divisors in `primes`.
std::vector<Perm> order_smooth_elements(const PermutationGroup& g,
                                        const std::vector<Int>& primes,
                                        std::size_t cap) {
  std::set<Int> allowed(primes.begin(), primes.end());
  std::vector<Perm> out;
  for (const Perm& e : g.elements(cap)) {
    std::uint64_t n = perm_order(e);
    if (n == 1) continue;
    bool smooth = true;
    for (const auto& [p, e] : factorize(Int(static_cast<unsigned long>(n))))
      if (!allowed.count(p)) {
        smooth = false;
        break;
      }
    if (smooth) out.push_back(e);
  }
  return out;
}

void validate_primes(const std::vector<Int>& primes) {
  if (primes.empty())
    throw Error(ErrorKind::Domain, "the prime list must not be empty");
  for (const Int& p : primes)
    if (!is_prime(p))
      throw Error(ErrorKind::Domain,
                  "the prime list contains a non-prime: " + p.get_str());
}

}  // namespace

PermutationGroup torsion_kill_step(const PermutationGroup& g,
                                   const std::vector<Int>& primes,
                                   std::size_t cap) {
  validate_primes(primes);
  Subgroup n = normal_closure(g, order_smooth_elements(g, primes, cap), cap);
  return quotient_action(g, n, cap);
}

ReductionTrace solvable_reduction(const PermutationGroup& g, std::size_t cap) {
  ReductionTrace trace;
  PermutationGroup current = g;
  while (true) {
    std::uint64_t order = current.order(cap);
    FgAbelianGroup ab = element_abelianization(current, cap);
    std::vector<Int> primes = torsion_primes(ab);
    if (primes.empty()) {
      // Trivial abelianization: the loop has nothing left to kill.  For
      // solvable inputs this only happens at the trivial group.
      trace.steps.push_back({order, ab, {}, 0});
      trace.terminal_order = order;
      return trace;
    }
    std::vector<Perm> victims = order_smooth_elements(current, primes, cap);
    Subgroup n = normal_closure(current, victims, cap);
    PermutationGroup next = quotient_action(current, n, cap);
    trace.steps.push_back({order, ab, primes, victims.size()});
    if (next.order(cap) >= order)
      throw Error(ErrorKind::Domain, "reduction step failed to shrink the group");
    current = std::move(next);
  }
}

TensorEpimorphismCheck lcs_tensor_epimorphism_check(const PermutationGroup& g,
                                                    std::size_t level,
                                                    std::size_t cap) {
  if (level == 0)
    throw Error(ErrorKind::Domain, "series levels are numbered from 1");
  std::vector<Subgroup> series = subgroup_series(g, cap).lower_central;
  // Past the computed tail the series is constant (it stops on a repeat or
  // at the trivial subgroup, and both persist).
  auto gamma = [&series](std::size_t k) -> const Subgroup& {
    return series[std::min(k - 1, series.size() - 1)];
  };
  const Subgroup& top = gamma(level);
  const Subgroup& mid = gamma(level + 1);
  const Subgroup& bottom = gamma(level + 2);

  PermutationGroup top_group(g.degree(), top.generators);
  PermutationGroup mid_group(g.degree(), mid.generators);

  TensorEpimorphismCheck r;
  r.level = level;
  r.level_quotient = quotient_abelian_invariants(top_group, mid, cap);
  r.abelianized = element_abelianization(g, cap);
  r.next_quotient = quotient_abelian_invariants(mid_group, bottom, cap);

  CosetIndexer rows(top_group, mid, cap);
  CosetIndexer cols(g, commutator_subgroup(g, cap), cap);
  CosetIndexer values(mid_group, bottom, cap);

  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  r.witness.assign(rows.size(), std::vector<std::size_t>(cols.size(), kUnset));
  r.well_defined = true;
  std::vector<Perm> image_seeds = bottom.generators;
  for (const Perm& a : top.elements) {
    std::size_t row = rows.index_of(a);
    for (const Perm& x : g.elements(cap)) {
      Perm c = perm_commutator(a, x);
      std::size_t value = values.index_of(c);
      std::size_t& cell = r.witness[row][cols.index_of(x)];
      if (cell == kUnset) {
        cell = value;
        image_seeds.push_back(std::move(c));
      } else if (cell != value) {
        r.well_defined = false;
      }
    }
  }
  Subgroup image = generated_subgroup(mid_group, image_seeds, cap);
  r.surjective = image.order() == mid_group.order(cap);
  return r;
}

PropagationCheck property_propagation_check(const PermutationGroup& g,
                                            const Int& p, std::size_t cap) {
  if (!is_prime(p))
    throw Error(ErrorKind::Domain, "p must be prime, got " + p.get_str());
  PropagationCheck r;
  r.p = p;
  r.nilpotent = subgroup_series(g, cap).nilpotent;
  r.ab_is_p_group =
      torsion_divisibility(element_abelianization(g, cap), p).is_p_group;
  auto primes = factorize(Int(static_cast<unsigned long>(g.order(cap))));
  r.g_is_p_group = std::all_of(primes.begin(), primes.end(),
                               [&p](const auto& q) { return q.first == p; });
  r.consistent = !(r.nilpotent && r.ab_is_p_group && !r.g_is_p_group);
  return r;
}

TorsionClassification classify_torsion_divisibility(const PermutationGroup& g,
                                                    std::size_t cap) {
  TorsionClassification r;
  r.order = g.order(cap);
  r.is_torsion = true;  // a fully enumerated group is torsion by inspection
  r.abelianization = element_abelianization(g, cap);

  std::set<Int> order_primes;
  for (const auto& [q, e] : factorize(Int(static_cast<unsigned long>(r.order))))
    order_primes.insert(q);

  const std::vector<Perm>& elements = g.elements(cap);
  for (const Int& p : order_primes) {
    PrimeClassification row;
    row.p = p;
    unsigned long pu = p.get_ui();
    std::set<Perm> image;
    for (const Perm& e : elements) {
      std::uint64_t n = perm_order(e);
      if (n % pu == 0) row.tor_p_nontrivial = true;
      Perm power = perm_identity(g.degree());
      for (unsigned long i = 0; i < pu; ++i) power = perm_compose(power, e);
      image.insert(std::move(power));
    }
    row.p_divisible = image.size() == elements.size();
    for (const Int& d : r.abelianization.invariant_factors())
      if (d % p == 0) row.tor_p_ab_nontrivial = true;
    row.condition_met = !row.p_divisible || row.tor_p_ab_nontrivial;
    r.per_prime.push_back(std::move(row));
  }
  return r;
}

TorsionClassification classify_torsion_divisibility(const Presentation& p,
                                                    std::size_t max_cosets,
                                                    std::size_t cap) {
  return classify_torsion_divisibility(
      to_permutation_group(todd_coxeter(p, {}, max_cosets)), cap);
}

}  // namespace grouptop
