/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "grouptop/error.hpp"

namespace grouptop {

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank,
                               std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw Error(ErrorKind::Domain, "invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorKind::Domain,
                  "invariant factors must form a divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(
    const std::vector<Int>& orders) {
  std::size_t rank = 0;
  // Bucket the primary components: for each prime, the descending list of
  // prime-power exponents. The k-th largest invariant factor multiplies
  // the k-th entry of every bucket.
  std::map<Int, std::vector<unsigned>> buckets;
  for (const Int& n : orders) {
    if (n < 0) throw Error(ErrorKind::Domain, "negative cyclic order");
    if (n == 0) {
      ++rank;
      continue;
    }
    for (const auto& [p, e] : factorize(n)) buckets[p].push_back(e);
  }
  std::size_t chain = 0;
  for (auto& [p, exps] : buckets) {
    std::sort(exps.rbegin(), exps.rend());
    chain = std::max(chain, exps.size());
  }
  std::vector<Int> factors(chain, 1);
  for (auto& [p, exps] : buckets)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exps[i]);
      factors[i] *= pe;  // i = 0 is the largest invariant factor
    }
  std::reverse(factors.begin(), factors.end());
  return FgAbelianGroup(rank, std::move(factors));
}

Int FgAbelianGroup::torsion_order() const {
  Int n = 1;
  for (const Int& d : factors_) n *= d;
  return n;
}

std::string FgAbelianGroup::to_text() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const Int& d : factors_) {
    if (!first) os << " ⊕ ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

FgAbelianGroup cokernel_of_rows(const IntMatrix& relations,
                                std::size_t generators) {
  if (relations.cols() != generators)
    throw Error(ErrorKind::Domain, "relation matrix width mismatch");
  std::vector<Int> diag = smith_diagonal(relations);
  std::vector<Int> orders(generators, 0);
  for (std::size_t i = 0; i < diag.size(); ++i) orders[i] = diag[i];
  // Zero diagonal entries and the extra generators are free summands;
  // from_cyclic_orders drops the unit factors.
  return FgAbelianGroup::from_cyclic_orders(orders);
}

FgAbelianGroup abelianization(const Presentation& p) {
  return cokernel_of_rows(abelianized_relation_matrix(p),
                          p.generator_count());
}

FgAbelianGroup tensor_product(const FgAbelianGroup& a,
                              const FgAbelianGroup& b) {
  // Bilinear expansion of the cyclic decompositions:
  // Z x Z = Z, Z x Z/d = Z/d, Z/d x Z/e = Z/gcd(d, e).
  std::vector<Int> orders;
  std::vector<Int> ca(a.free_rank(), 0), cb(b.free_rank(), 0);
  for (const Int& d : a.invariant_factors()) ca.push_back(d);
  for (const Int& e : b.invariant_factors()) cb.push_back(e);
  for (const Int& d : ca)
    for (const Int& e : cb) {
      if (d == 0 && e == 0)
        orders.push_back(0);
      else if (d == 0)
        orders.push_back(e);
      else if (e == 0)
        orders.push_back(d);
      else
        orders.push_back(gcd(d, e));
    }
  return FgAbelianGroup::from_cyclic_orders(orders);
}

bool is_quotient_of(const FgAbelianGroup& q, const FgAbelianGroup& g) {
  if (q.free_rank() > g.free_rank()) return false;
  std::size_t spare = g.free_rank() - q.free_rank();
  const std::vector<Int>& e = q.invariant_factors();
  const std::vector<Int>& d = g.invariant_factors();
  // Each spare free summand of g can cover one torsion factor of q
  // (largest first); the rest must divide into g's chain top-aligned.
  std::size_t covered = std::min(spare, e.size());
  std::size_t remain = e.size() - covered;
  if (remain > d.size()) return false;
  for (std::size_t i = 0; i < remain; ++i)
    if (d[d.size() - 1 - i] % e[remain - 1 - i] != 0) return false;
  return true;
}

TorsionDivisibilityReport torsion_divisibility(const FgAbelianGroup& g,
                                               const Int& p) {
  if (!is_prime(p))
    throw Error(ErrorKind::Domain, "torsion report requires a prime");
  TorsionDivisibilityReport r;
  r.p = p;
  r.is_torsion = g.free_rank() == 0;
  r.has_p_torsion = false;
  r.is_p_group = r.is_torsion;
  for (const Int& d : g.invariant_factors()) {
    if (d % p == 0) r.has_p_torsion = true;
    Int rest = d;
    while (rest % p == 0) rest /= p;
    if (rest != 1) r.is_p_group = false;
  }
  r.p_divisible = r.is_torsion && !r.has_p_torsion;
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  // 50 Miller-Rabin rounds; for desk-scale inputs this is decisive.
  return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
  if (n < 1) throw Error(ErrorKind::Domain, "factorize requires n >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  Int rest = n;
  for (Int p = 2; p * p <= rest; p = p == 2 ? Int(3) : Int(p + 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

}  // namespace grouptop
