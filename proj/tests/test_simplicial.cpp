/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <optional>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "grouptop/error.hpp"
#include "grouptop/simplicial.hpp"

using grouptop::CoefficientRing;
using grouptop::CoefficientTriple;
using grouptop::DegreeSummary;
using grouptop::Error;
using grouptop::Int;
using grouptop::SimplicialComplex;
using grouptop::TripleKind;

namespace {

using Faces = std::vector<std::vector<std::uint32_t>>;

SimplicialComplex sphere() {
  return SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Faces projective_faces() {
  return {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
          {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
}

/// Six-vertex triangulation of the projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex(6, projective_faces());
}

/// The projective plane minus the face {0,1,2}: a nine-triangle band
/// whose boundary is the cycle 0-1-2.
SimplicialComplex band() {
  Faces faces = projective_faces();
  faces.erase(faces.begin());
  return SimplicialComplex(6, faces);
}

SimplicialComplex band_boundary() {
  return SimplicialComplex(6, {{0, 1}, {0, 2}, {1, 2}});
}

/// Seven-vertex triangulation of the torus.
SimplicialComplex torus() {
  Faces faces;
  for (std::uint32_t i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex(7, faces);
}

SimplicialComplex triangle() { return SimplicialComplex(3, {{0, 1, 2}}); }

SimplicialComplex triangle_boundary() {
  return SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}});
}

DegreeSummary deg(std::size_t free_rank, std::vector<Int> torsion = {}) {
  return DegreeSummary{free_rank, std::move(torsion)};
}

grouptop::CohomologyReport homology_of(
    const SimplicialComplex& k, const CoefficientRing& ring,
    const std::optional<SimplicialComplex>& rel = std::nullopt) {
  return grouptop::homology(grouptop::build_chain_complex(k, ring, rel));
}

grouptop::CohomologyReport cohomology_of(
    const SimplicialComplex& k, const CoefficientRing& ring,
    const std::optional<SimplicialComplex>& rel = std::nullopt) {
  return grouptop::cohomology(grouptop::build_chain_complex(k, ring, rel));
}

/// Number of invariant factors divisible by p.
std::size_t p_torsion_count(const DegreeSummary& s, const Int& p) {
  std::size_t count = 0;
  for (const Int& d : s.torsion)
    if (d % p == 0) ++count;
  return count;
}

}  // namespace

TEST_CASE("complex construction and validation", "[simplicial]") {
  SECTION("downward closure") {
    SimplicialComplex t = triangle();
    REQUIRE(t.vertex_count() == 3);
    REQUIRE(t.dimension() == 2);
    REQUIRE(t.simplices(0).size() == 3);
    REQUIRE(t.simplices(1).size() == 3);
    REQUIRE(t.simplices(2).size() == 1);
    REQUIRE(t.simplex_count() == 7);
    REQUIRE(t.euler_characteristic() == 1);
    REQUIRE(t.contains({2, 0}));
    REQUIRE_FALSE(t.contains({0, 3}));
  }

  SECTION("duplicate and unsorted input collapses") {
    SimplicialComplex k(3, {{1, 0}, {0, 1}, {0, 1}});
    REQUIRE(k.simplices(1).size() == 1);
    REQUIRE(k.simplices(0).size() == 2);
  }

  SECTION("bad simplices are rejected") {
    REQUIRE_THROWS_AS(SimplicialComplex(3, {{}}), Error);
    REQUIRE_THROWS_AS(SimplicialComplex(5, {{0, 1, 2, 3, 4}}), Error);
    REQUIRE_THROWS_AS(SimplicialComplex(3, {{0, 3}}), Error);
    REQUIRE_THROWS_AS(SimplicialComplex(3, {{1, 1}}), Error);
  }

  SECTION("fixture counts") {
    REQUIRE(projective_plane().simplices(0).size() == 6);
    REQUIRE(projective_plane().simplices(1).size() == 15);
    REQUIRE(projective_plane().simplices(2).size() == 10);
    REQUIRE(projective_plane().euler_characteristic() == 1);
    REQUIRE(band().simplices(2).size() == 9);
    REQUIRE(band().euler_characteristic() == 0);
    REQUIRE(torus().simplices(0).size() == 7);
    REQUIRE(torus().simplices(1).size() == 21);
    REQUIRE(torus().simplices(2).size() == 14);
    REQUIRE(torus().euler_characteristic() == 0);
    REQUIRE(sphere().euler_characteristic() == 2);
  }

  SECTION("subcomplex recognition") {
    REQUIRE(band().has_subcomplex(band_boundary()));
    REQUIRE(projective_plane().has_subcomplex(band()));
    REQUIRE_FALSE(band_boundary().has_subcomplex(band()));
    REQUIRE_FALSE(torus().has_subcomplex(sphere()));
  }
}

TEST_CASE("complex JSON round trip", "[simplicial]") {
  for (const SimplicialComplex& k :
       {sphere(), projective_plane(), band(), torus(), triangle()}) {
    REQUIRE(SimplicialComplex::parse_json(k.to_json()) == k);
  }
  REQUIRE_THROWS_AS(SimplicialComplex::parse_json("{"), Error);
  REQUIRE_THROWS_AS(SimplicialComplex::parse_json("[1, 2]"), Error);
  REQUIRE_THROWS_AS(SimplicialComplex::parse_json("{\"vertices\": 3}"), Error);
  REQUIRE_THROWS_AS(
      SimplicialComplex::parse_json("{\"vertices\": 3, \"simplices\": [[-1]]}"),
      Error);
  SimplicialComplex parsed = SimplicialComplex::parse_json(
      "{\"vertices\": 3, \"simplices\": [[2, 0, 1]]}");
  REQUIRE(parsed == triangle());
}

TEST_CASE("chain complex assembly", "[simplicial]") {
  SECTION("boundary of the 3-simplex ball") {
    SimplicialComplex ball(4, {{0, 1, 2, 3}});
    auto c = grouptop::build_chain_complex(ball, CoefficientRing::integers());
    REQUIRE(c.boundary[2].rows() == 6);
    REQUIRE(c.boundary[2].cols() == 4);
    REQUIRE(c.boundary[3].rows() == 4);
    REQUIRE(c.boundary[3].cols() == 1);
    REQUIRE((c.boundary[1] * c.boundary[2]).is_zero());
    REQUIRE((c.boundary[2] * c.boundary[3]).is_zero());
  }

  SECTION("relative cells exclude the subcomplex") {
    auto c = grouptop::build_chain_complex(triangle(), CoefficientRing::integers(),
                                           triangle_boundary());
    REQUIRE(c.relative);
    REQUIRE(c.cells[0].empty());
    REQUIRE(c.cells[1].empty());
    REQUIRE(c.cells[2].size() == 1);
  }

  SECTION("rel must be a subcomplex") {
    REQUIRE_THROWS_AS(grouptop::build_chain_complex(
                          triangle(), CoefficientRing::integers(), torus()),
                      Error);
  }

  SECTION("modulus validation") {
    REQUIRE_THROWS_AS(CoefficientRing::modular(0), Error);
    REQUIRE_NOTHROW(CoefficientRing::modular(1));
  }
}

TEST_CASE("coefficient ring parsing", "[simplicial]") {
  REQUIRE(grouptop::parse_coefficient_ring("z") == CoefficientRing::integers());
  REQUIRE(grouptop::parse_coefficient_ring("Q") == CoefficientRing::rationals());
  REQUIRE(grouptop::parse_coefficient_ring("Z/6") ==
          CoefficientRing::modular(6));
  REQUIRE(grouptop::parse_coefficient_ring("z/2").to_text() == "Z/2");
  REQUIRE_THROWS_AS(grouptop::parse_coefficient_ring("gf(2)"), Error);
  REQUIRE_THROWS_AS(grouptop::parse_coefficient_ring("z/"), Error);
  REQUIRE_THROWS_AS(grouptop::parse_coefficient_ring("z/-2"), Error);
}

TEST_CASE("integral homology oracles", "[simplicial]") {
  SECTION("sphere") {
    auto h = homology_of(sphere(), CoefficientRing::integers());
    REQUIRE(h.degrees[0] == deg(1));
    REQUIRE(h.degrees[1] == deg(0));
    REQUIRE(h.degrees[2] == deg(1));
    REQUIRE(h.degrees[3] == deg(0));
  }

  SECTION("projective plane") {
    auto h = homology_of(projective_plane(), CoefficientRing::integers());
    REQUIRE(h.degrees[0] == deg(1));
    REQUIRE(h.degrees[1] == deg(0, {2}));
    REQUIRE(h.degrees[2] == deg(0));
    auto hh = cohomology_of(projective_plane(), CoefficientRing::integers());
    REQUIRE(hh.degrees[0] == deg(1));
    REQUIRE(hh.degrees[1] == deg(0));
    REQUIRE(hh.degrees[2] == deg(0, {2}));
  }

  SECTION("torus") {
    auto h = homology_of(torus(), CoefficientRing::integers());
    REQUIRE(h.degrees[0] == deg(1));
    REQUIRE(h.degrees[1] == deg(2));
    REQUIRE(h.degrees[2] == deg(1));
    auto hh = cohomology_of(torus(), CoefficientRing::integers());
    REQUIRE(hh.degrees[1] == deg(2));
    REQUIRE(hh.degrees[2] == deg(1));
  }

  SECTION("band deformation retracts to a circle") {
    auto h = homology_of(band(), CoefficientRing::integers());
    REQUIRE(h.degrees[0] == deg(1));
    REQUIRE(h.degrees[1] == deg(1));
    REQUIRE(h.degrees[2] == deg(0));
  }

  SECTION("band rel boundary") {
    auto h = homology_of(band(), CoefficientRing::integers(), band_boundary());
    REQUIRE(h.degrees[0] == deg(0));
    REQUIRE(h.degrees[1] == deg(0, {2}));
    REQUIRE(h.degrees[2] == deg(0));
    auto hh =
        cohomology_of(band(), CoefficientRing::integers(), band_boundary());
    REQUIRE(hh.degrees[1] == deg(0));
    REQUIRE(hh.degrees[2] == deg(0, {2}));
  }

  SECTION("triangle rel boundary is a relative sphere") {
    auto h =
        homology_of(triangle(), CoefficientRing::integers(), triangle_boundary());
    REQUIRE(h.degrees[2] == deg(1));
    auto hh = cohomology_of(triangle(), CoefficientRing::integers(),
                            triangle_boundary());
    REQUIRE(hh.degrees[2] == deg(1));
  }
}

TEST_CASE("field and modular coefficients", "[simplicial]") {
  SECTION("rational Betti numbers") {
    auto h = homology_of(projective_plane(), CoefficientRing::rationals());
    REQUIRE(h.degrees[0] == deg(1));
    REQUIRE(h.degrees[1] == deg(0));
    REQUIRE(h.degrees[2] == deg(0));
    auto t = homology_of(torus(), CoefficientRing::rationals());
    REQUIRE(t.degrees[1] == deg(2));
  }

  SECTION("projective plane over Z/2 and Z/3") {
    auto h2 = homology_of(projective_plane(), CoefficientRing::modular(2));
    REQUIRE(h2.degrees[0] == deg(1));
    REQUIRE(h2.degrees[1] == deg(1));
    REQUIRE(h2.degrees[2] == deg(1));
    auto h3 = homology_of(projective_plane(), CoefficientRing::modular(3));
    REQUIRE(h3.degrees[0] == deg(1));
    REQUIRE(h3.degrees[1] == deg(0));
    REQUIRE(h3.degrees[2] == deg(0));
  }

  SECTION("composite modulus keeps the module structure") {
    auto h = homology_of(projective_plane(), CoefficientRing::modular(4));
    REQUIRE(h.degrees[0] == deg(1));  // one full Z/4 summand
    REQUIRE(h.degrees[1] == deg(0, {2}));
    REQUIRE(h.degrees[2] == deg(0, {2}));
  }

  SECTION("modulus one is the zero ring") {
    auto h = homology_of(torus(), CoefficientRing::modular(1));
    for (const auto& d : h.degrees) REQUIRE(d == deg(0));
  }

  SECTION("band rel boundary over Z/3 vanishes in degree two") {
    auto hh =
        cohomology_of(band(), CoefficientRing::modular(3), band_boundary());
    REQUIRE(hh.degrees[2] == deg(0));
    auto h2 = cohomology_of(band(), CoefficientRing::modular(2), band_boundary());
    REQUIRE(h2.degrees[2] == deg(1));
  }

  SECTION("field cohomology matches field homology dimensionwise") {
    for (const SimplicialComplex& k : {sphere(), projective_plane(), torus()}) {
      for (long p : {2L, 3L, 5L}) {
        auto h = homology_of(k, CoefficientRing::modular(p));
        auto hh = cohomology_of(k, CoefficientRing::modular(p));
        for (std::size_t d = 0; d < 4; ++d)
          REQUIRE(h.degrees[d].free_rank == hh.degrees[d].free_rank);
      }
    }
  }
}

TEST_CASE("euler characteristic and universal coefficients", "[simplicial]") {
  std::vector<SimplicialComplex> corpus = {sphere(), projective_plane(), band(),
                                           torus(), triangle()};
  SECTION("face counts against rational Betti numbers") {
    for (const auto& k : corpus) {
      auto h = homology_of(k, CoefficientRing::rationals());
      long long alternating = 0;
      for (std::size_t d = 0; d < 4; ++d) {
        long long rank = static_cast<long long>(h.degrees[d].free_rank);
        alternating += (d % 2 == 0) ? rank : -rank;
      }
      REQUIRE(alternating == k.euler_characteristic());
    }
  }

  SECTION("rank over Z/p from rational rank and integral torsion") {
    for (const auto& k : corpus) {
      auto hq = homology_of(k, CoefficientRing::rationals());
      auto hz = homology_of(k, CoefficientRing::integers());
      for (long p : {2L, 3L, 5L}) {
        auto hp = homology_of(k, CoefficientRing::modular(p));
        for (std::size_t d = 0; d < 4; ++d) {
          std::size_t expected = hq.degrees[d].free_rank +
                                 p_torsion_count(hz.degrees[d], p) +
                                 (d > 0 ? p_torsion_count(hz.degrees[d - 1], p) : 0);
          REQUIRE(hp.degrees[d].free_rank == expected);
          REQUIRE(hp.degrees[d].torsion.empty());
        }
      }
    }
  }
}

TEST_CASE("coefficient sequence exactness", "[simplicial]") {
  SECTION("projective plane detects the torsion class") {
    auto r = grouptop::bockstein_check(projective_plane(), std::nullopt,
                                       {TripleKind::IntegersModN, Int(2)});
    REQUIRE(r.exact);
    REQUIRE(r.slots.size() == 12);
    // The connecting map H^1(Z/2) -> H^2(Z) is an isomorphism of Z/2.
    REQUIRE(r.connecting_image[1] == grouptop::FgAbelianGroup(0, {Int(2)}));
    REQUIRE(r.connecting_kernel[1].is_trivial());
    REQUIRE(r.third.degrees[1] == deg(1));
    REQUIRE(r.first.degrees[2] == deg(0, {2}));
  }

  SECTION("projective plane with the prime square sequence") {
    auto r = grouptop::bockstein_check(projective_plane(), std::nullopt,
                                       {TripleKind::ModPSquared, Int(2)});
    REQUIRE(r.exact);
    REQUIRE(r.slots.size() == 12);
    // The mod-2 connecting map is nonzero on H^1.
    REQUIRE(r.connecting_image[1] == grouptop::FgAbelianGroup(0, {Int(2)}));
  }

  SECTION("torsion-free complexes have zero connecting maps") {
    auto r = grouptop::bockstein_check(sphere(), std::nullopt,
                                       {TripleKind::IntegersModN, Int(2)});
    REQUIRE(r.exact);
    for (const auto& image : r.connecting_image) REQUIRE(image.is_trivial());
  }

  SECTION("degenerate modulus one") {
    auto r = grouptop::bockstein_check(sphere(), std::nullopt,
                                       {TripleKind::IntegersModN, Int(1)});
    REQUIRE(r.exact);
    for (const auto& d : r.third.degrees) REQUIRE(d == deg(0));
  }

  SECTION("torus stays exact at odd primes") {
    for (long p : {2L, 3L, 5L}) {
      auto a = grouptop::bockstein_check(torus(), std::nullopt,
                                         {TripleKind::IntegersModN, Int(p)});
      REQUIRE(a.exact);
      auto b = grouptop::bockstein_check(torus(), std::nullopt,
                                         {TripleKind::ModPSquared, Int(p)});
      REQUIRE(b.exact);
    }
  }

  SECTION("relative pair stays exact") {
    for (long p : {2L, 3L}) {
      auto r = grouptop::bockstein_check(band(), band_boundary(),
                                         {TripleKind::IntegersModN, Int(p)});
      REQUIRE(r.exact);
      REQUIRE(r.relative);
    }
  }

  SECTION("prime validation for the square sequence") {
    REQUIRE_THROWS_AS(grouptop::bockstein_check(
                          sphere(), std::nullopt, {TripleKind::ModPSquared, Int(4)}),
                      Error);
  }

  SECTION("triple rendering") {
    REQUIRE(CoefficientTriple{TripleKind::IntegersModN, Int(2)}.to_text() ==
            "0 -> Z -> Z -> Z/2 -> 0");
    REQUIRE(CoefficientTriple{TripleKind::ModPSquared, Int(3)}.to_text() ==
            "0 -> Z/3 -> Z/9 -> Z/3 -> 0");
  }
}
