/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/simplicial.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grouptop/error.hpp"
#include "grouptop/lattice.hpp"

namespace grouptop {

namespace {

IntMatrix scaled_identity(std::size_t k, const Int& c) {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = c;
  return m;
}

IntMatrix top_rows(const IntMatrix& m, std::size_t count) {
  IntMatrix out(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace

CoefficientRing CoefficientRing::modular(Int n) {
  if (n < 1)
    throw Error(ErrorKind::Domain, "modulus must be at least 1");
  return {RingKind::Modular, std::move(n)};
}

std::string CoefficientRing::to_text() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::Modular:
      return "Z/" + modulus.get_str();
  }
  return "?";
}

CoefficientRing parse_coefficient_ring(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(
      static_cast<unsigned char>(c))));
  if (t == "z") return CoefficientRing::integers();
  if (t == "q") return CoefficientRing::rationals();
  if (t.rfind("z/", 0) == 0) {
    std::string digits = t.substr(2);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      Int n(digits, 10);
      if (n >= 1) return CoefficientRing::modular(n);
    }
  }
  throw Error(ErrorKind::Parse,
              "unrecognized coefficient ring \"" + text +
                  "\"; expected z, q, or z/N");
}

SimplicialComplex::SimplicialComplex(
    std::size_t vertex_count,
    const std::vector<std::vector<std::uint32_t>>& simplices)
    : vertex_count_(vertex_count) {
  std::array<std::set<std::vector<std::uint32_t>>, 4> closed;
  for (const auto& given : simplices) {
    if (given.empty())
      throw Error(ErrorKind::Domain, "a simplex needs at least one vertex");
    if (given.size() > 4)
      throw Error(ErrorKind::Domain, "simplex dimension exceeds 3");
    std::vector<std::uint32_t> s = given;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorKind::Domain, "simplex repeats a vertex");
    if (s.back() >= vertex_count_)
      throw Error(ErrorKind::Domain, "simplex vertex out of range");
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<std::uint32_t> face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      closed[face.size() - 1].insert(std::move(face));
    }
  }
  for (std::size_t k = 0; k < 4; ++k)
    by_dim_[k].assign(closed[k].begin(), closed[k].end());
}

int SimplicialComplex::dimension() const {
  for (int k = 3; k >= 0; --k)
    if (!by_dim_[static_cast<std::size_t>(k)].empty()) return k;
  return -1;
}

const std::vector<std::vector<std::uint32_t>>& SimplicialComplex::simplices(
    std::size_t k) const {
  if (k > 3) throw Error(ErrorKind::Domain, "dimension exceeds 3");
  return by_dim_[k];
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t total = 0;
  for (const auto& list : by_dim_) total += list.size();
  return total;
}

bool SimplicialComplex::contains(std::vector<std::uint32_t> simplex) const {
  if (simplex.empty() || simplex.size() > 4) return false;
  std::sort(simplex.begin(), simplex.end());
  const auto& list = by_dim_[simplex.size() - 1];
  return std::binary_search(list.begin(), list.end(), simplex);
}

bool SimplicialComplex::has_subcomplex(const SimplicialComplex& a) const {
  if (a.vertex_count_ > vertex_count_) return false;
  for (std::size_t k = 0; k < 4; ++k)
    for (const auto& s : a.by_dim_[k])
      if (!std::binary_search(by_dim_[k].begin(), by_dim_[k].end(), s))
        return false;
  return true;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    long long count = static_cast<long long>(by_dim_[k].size());
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

std::string SimplicialComplex::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = vertex_count_;
  j["simplices"] = nlohmann::ordered_json::array();
  for (const auto& list : by_dim_)
    for (const auto& s : list) j["simplices"].push_back(s);
  return j.dump();
}

SimplicialComplex SimplicialComplex::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid complex JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices") ||
      !j["vertices"].is_number_unsigned() || !j["simplices"].is_array())
    throw Error(ErrorKind::Parse,
                "complex JSON must be {\"vertices\": n, \"simplices\": [[...]]}");
  std::vector<std::vector<std::uint32_t>> simplices;
  for (const auto& item : j["simplices"]) {
    if (!item.is_array())
      throw Error(ErrorKind::Parse, "each simplex must be an array of vertices");
    std::vector<std::uint32_t> s;
    for (const auto& v : item) {
      if (!v.is_number_unsigned())
        throw Error(ErrorKind::Parse, "vertex indices must be nonnegative integers");
      s.push_back(v.get<std::uint32_t>());
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex(j["vertices"].get<std::size_t>(), simplices);
}

ChainComplexData build_chain_complex(const SimplicialComplex& k,
                                     const CoefficientRing& ring,
                                     const std::optional<SimplicialComplex>& rel) {
  if (ring.kind == RingKind::Modular && ring.modulus < 1)
    throw Error(ErrorKind::Domain, "modulus must be at least 1");
  if (rel && !k.has_subcomplex(*rel))
    throw Error(ErrorKind::Domain, "rel is not a subcomplex of the complex");

  ChainComplexData c;
  c.ring = ring;
  c.relative = rel.has_value();
  for (std::size_t deg = 0; deg < 4; ++deg) {
    if (rel) {
      std::set_difference(k.simplices(deg).begin(), k.simplices(deg).end(),
                          rel->simplices(deg).begin(), rel->simplices(deg).end(),
                          std::back_inserter(c.cells[deg]));
    } else {
      c.cells[deg] = k.simplices(deg);
    }
  }

  c.boundary[0] = IntMatrix(0, c.cells[0].size());
  for (std::size_t deg = 1; deg < 4; ++deg) {
    const auto& lower = c.cells[deg - 1];
    IntMatrix b(lower.size(), c.cells[deg].size());
    for (std::size_t j = 0; j < c.cells[deg].size(); ++j) {
      const auto& cell = c.cells[deg][j];
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        std::vector<std::uint32_t> face;
        for (std::size_t i = 0; i < cell.size(); ++i)
          if (i != drop) face.push_back(cell[i]);
        auto it = std::lower_bound(lower.begin(), lower.end(), face);
        if (it != lower.end() && *it == face)
          b.at(static_cast<std::size_t>(it - lower.begin()), j) =
              (drop % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary[deg] = std::move(b);
  }

  for (std::size_t deg = 2; deg < 4; ++deg)
    if (!(c.boundary[deg - 1] * c.boundary[deg]).is_zero())
      throw Error(ErrorKind::Domain, "boundary of a boundary is nonzero");
  return c;
}

namespace {

std::size_t nonzero_count(const std::vector<Int>& diag) {
  std::size_t r = 0;
  for (const Int& d : diag)
    if (d != 0) ++r;
  return r;
}

/// Summary of kernel(outgoing)/image(incoming) in one degree of dimension
/// dim; outgoing maps out of the degree, incoming maps into it.
DegreeSummary summarize_degree(const CoefficientRing& ring, std::size_t dim,
                               const IntMatrix& outgoing,
                               const IntMatrix& incoming) {
  DegreeSummary s;
  switch (ring.kind) {
    case RingKind::Integers:
    case RingKind::Rationals: {
      std::size_t rank_out = nonzero_count(smith_diagonal(outgoing));
      std::vector<Int> in_diag = smith_diagonal(incoming);
      std::size_t rank_in = nonzero_count(in_diag);
      s.free_rank = dim - rank_out - rank_in;
      if (ring.kind == RingKind::Integers)
        for (const Int& d : in_diag)
          if (d > 1) s.torsion.push_back(d);
      break;
    }
    case RingKind::Modular: {
      const Int& n = ring.modulus;
      if (n == 1) break;  // the zero ring: every group is trivial
      IntMatrix stacked =
          hcat(outgoing, scaled_identity(outgoing.rows(), n));
      IntMatrix numerator = top_rows(SmithSolver(stacked).kernel_basis(), dim);
      IntMatrix denominator = hcat(incoming, scaled_identity(dim, n));
      FgAbelianGroup h =
          LatticeQuotient(dim, std::move(numerator), std::move(denominator))
              .group();
      if (h.free_rank() != 0)
        throw Error(ErrorKind::Domain,
                    "modular homology came out infinite; this is a bug");
      for (const Int& d : h.invariant_factors()) {
        if (d == n)
          ++s.free_rank;  // a full Z/n summand
        else
          s.torsion.push_back(d);
      }
      break;
    }
  }
  return s;
}

}  // namespace

CohomologyReport homology(const ChainComplexData& c) {
  CohomologyReport r;
  r.ring = c.ring;
  r.relative = c.relative;
  r.cochain = false;
  IntMatrix past_top(c.cells[3].size(), 0);
  for (std::size_t deg = 0; deg < 4; ++deg) {
    const IntMatrix& incoming = (deg < 3) ? c.boundary[deg + 1] : past_top;
    r.degrees[deg] =
        summarize_degree(c.ring, c.cells[deg].size(), c.boundary[deg], incoming);
  }
  return r;
}

CohomologyReport cohomology(const ChainComplexData& c) {
  CohomologyReport r;
  r.ring = c.ring;
  r.relative = c.relative;
  r.cochain = true;
  IntMatrix past_top(c.cells[3].size(), 0);
  for (std::size_t deg = 0; deg < 4; ++deg) {
    IntMatrix outgoing =
        (deg < 3) ? c.boundary[deg + 1].transposed() : past_top.transposed();
    IntMatrix incoming = c.boundary[deg].transposed();
    r.degrees[deg] =
        summarize_degree(c.ring, c.cells[deg].size(), outgoing, incoming);
  }
  return r;
}

std::string CoefficientTriple::to_text() const {
  switch (kind) {
    case TripleKind::IntegersModN:
      return "0 -> Z -> Z -> Z/" + n.get_str() + " -> 0";
    case TripleKind::ModPSquared: {
      Int square = n * n;
      return "0 -> Z/" + n.get_str() + " -> Z/" + square.get_str() + " -> Z/" +
             n.get_str() + " -> 0";
    }
  }
  return "?";
}

BocksteinReport bockstein_check(const SimplicialComplex& k,
                                const std::optional<SimplicialComplex>& rel,
                                const CoefficientTriple& triple) {
  CoefficientRing first_ring, middle_ring, third_ring;
  Int step;  // the multiplier of the injection and the connecting divisor
  switch (triple.kind) {
    case TripleKind::IntegersModN:
      if (triple.n < 1)
        throw Error(ErrorKind::Domain, "the quotient modulus must be at least 1");
      first_ring = CoefficientRing::integers();
      middle_ring = CoefficientRing::integers();
      third_ring = CoefficientRing::modular(triple.n);
      step = triple.n;
      break;
    case TripleKind::ModPSquared:
      if (!is_prime(triple.n))
        throw Error(ErrorKind::Domain,
                    "the coefficient sequence needs a prime, got " +
                        triple.n.get_str());
      first_ring = CoefficientRing::modular(triple.n);
      middle_ring = CoefficientRing::modular(triple.n * triple.n);
      third_ring = CoefficientRing::modular(triple.n);
      step = triple.n;
      break;
  }

  ChainComplexData c = build_chain_complex(k, CoefficientRing::integers(), rel);
  std::array<std::size_t, 4> dim;
  for (std::size_t deg = 0; deg < 4; ++deg) dim[deg] = c.cells[deg].size();

  // Coboundary out of each degree; degree 3 maps into the zero group.
  std::array<IntMatrix, 4> delta;
  for (std::size_t deg = 0; deg < 3; ++deg)
    delta[deg] = c.boundary[deg + 1].transposed();
  delta[3] = IntMatrix(0, dim[3]);

  auto cochain_lattice = [&](std::size_t deg, const Int& modulus) {
    IntMatrix numerator, denominator;
    if (modulus == 0) {
      numerator = SmithSolver(delta[deg]).kernel_basis();
      denominator = c.boundary[deg].transposed();
    } else {
      IntMatrix stacked =
          hcat(delta[deg], scaled_identity(delta[deg].rows(), modulus));
      numerator = top_rows(SmithSolver(stacked).kernel_basis(), dim[deg]);
      denominator = hcat(c.boundary[deg].transposed(),
                         scaled_identity(dim[deg], modulus));
    }
    return LatticeQuotient(dim[deg], std::move(numerator), std::move(denominator));
  };

  auto modulus_of = [](const CoefficientRing& ring) {
    return ring.kind == RingKind::Modular ? ring.modulus : Int(0);
  };

  std::vector<LatticeQuotient> first_group, middle_group, third_group;
  for (std::size_t deg = 0; deg < 4; ++deg) {
    first_group.push_back(cochain_lattice(deg, modulus_of(first_ring)));
    middle_group.push_back(cochain_lattice(deg, modulus_of(middle_ring)));
    third_group.push_back(cochain_lattice(deg, modulus_of(third_ring)));
  }
  LatticeQuotient zero_group(0, IntMatrix(0, 0), IntMatrix(0, 0));

  BocksteinReport r;
  r.triple = triple;
  r.relative = rel.has_value();
  r.first = cohomology(build_chain_complex(k, first_ring, rel));
  r.middle = cohomology(build_chain_complex(k, middle_ring, rel));
  r.third = cohomology(build_chain_complex(k, third_ring, rel));

  auto label = [](std::size_t deg, const CoefficientRing& ring) {
    return "H^" + std::to_string(deg) + "(" + ring.to_text() + ")";
  };

  r.exact = true;
  auto push_slot = [&r, &label](std::size_t deg, const CoefficientRing& ring,
                                ExactnessSlot slot) -> const BocksteinSlot& {
    r.slots.push_back({label(deg, ring), slot.exact, std::move(slot.image),
                       std::move(slot.kernel)});
    r.exact = r.exact && slot.exact;
    return r.slots.back();
  };

  for (std::size_t deg = 0; deg < 4; ++deg) {
    LatticeMap inject{scaled_identity(dim[deg], step), 1};
    LatticeMap project{IntMatrix::identity(dim[deg]), 1};

    // At H^deg(first): in from the previous connecting map, out by the
    // coefficient injection.
    ExactnessSlot at_first =
        deg == 0
            ? check_exactness(zero_group, LatticeMap{IntMatrix(dim[0], 0), 1},
                              first_group[0], inject, middle_group[0])
            : check_exactness(third_group[deg - 1], LatticeMap{delta[deg - 1], step},
                              first_group[deg], inject, middle_group[deg]);
    const BocksteinSlot& stored = push_slot(deg, first_ring, std::move(at_first));
    if (deg > 0) r.connecting_image[deg - 1] = stored.image;

    // At H^deg(middle): in by injection, out by reduction.
    push_slot(deg, middle_ring,
              check_exactness(first_group[deg], inject, middle_group[deg],
                              project, third_group[deg]));

    // At H^deg(third): in by reduction, out by the connecting map (zero
    // past the top dimension).
    ExactnessSlot at_third =
        deg < 3 ? check_exactness(middle_group[deg], project, third_group[deg],
                                  LatticeMap{delta[deg], step},
                                  first_group[deg + 1])
                : check_exactness(middle_group[3], project, third_group[3],
                                  LatticeMap{IntMatrix(0, dim[3]), 1}, zero_group);
    const BocksteinSlot& third_stored =
        push_slot(deg, third_ring, std::move(at_third));
    r.connecting_kernel[deg] = third_stored.kernel;
  }
  r.connecting_image[3] = FgAbelianGroup();
  return r;
}

}  // namespace grouptop
