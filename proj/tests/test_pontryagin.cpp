/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "grouptop/error.hpp"
#include "grouptop/pontryagin.hpp"

using grouptop::CoefficientRing;
using grouptop::DegreeSummary;
using grouptop::Error;
using grouptop::ErrorKind;
using grouptop::Int;
using grouptop::PontryaginStage;

namespace {

DegreeSummary deg(std::size_t free_rank, std::vector<Int> torsion = {}) {
  return DegreeSummary{free_rank, std::move(torsion)};
}

std::size_t count(const PontryaginStage& s, std::size_t k) {
  return s.complex.simplices(k).size();
}

}  // namespace

TEST_CASE("fan disks", "[pontryagin]") {
  SECTION("n = 0 is rejected") {
    REQUIRE_THROWS_AS(grouptop::triangulated_disk(0), Error);
  }

  SECTION("single triangle has its whole frontier marked") {
    PontryaginStage s = grouptop::triangulated_disk(1);
    REQUIRE(s.generation == 0);
    REQUIRE(s.patch_registry.empty());
    REQUIRE(count(s, 0) == 3);
    REQUIRE(count(s, 1) == 3);
    REQUIRE(count(s, 2) == 1);
    REQUIRE(s.boundary_mark.simplices(1).size() == 3);
    REQUIRE(s.complex.has_subcomplex(s.boundary_mark));
  }

  SECTION("counts for small fans") {
    PontryaginStage two = grouptop::triangulated_disk(2);
    REQUIRE(count(two, 0) == 4);
    REQUIRE(count(two, 1) == 5);
    REQUIRE(count(two, 2) == 2);
    PontryaginStage three = grouptop::triangulated_disk(3);
    REQUIRE(count(three, 0) == 4);
    REQUIRE(count(three, 2) == 3);
    PontryaginStage six = grouptop::triangulated_disk(6);
    REQUIRE(count(six, 0) == 7);
    REQUIRE(count(six, 1) == 12);
    REQUIRE(count(six, 2) == 6);
  }

  SECTION("every fan is a disk with a cycle boundary") {
    for (std::size_t n : {1u, 2u, 3u, 4u, 6u, 9u}) {
      PontryaginStage s = grouptop::triangulated_disk(n);
      REQUIRE(s.complex.euler_characteristic() == 1);
      REQUIRE(s.complex.has_subcomplex(s.boundary_mark));
      // A simple cycle: as many edges as vertices, and each vertex on
      // exactly two boundary edges.
      const auto& edges = s.boundary_mark.simplices(1);
      REQUIRE(edges.size() == s.boundary_mark.simplices(0).size());
      std::map<std::uint32_t, int> degree_of;
      for (const auto& e : edges) {
        degree_of[e[0]]++;
        degree_of[e[1]]++;
      }
      for (const auto& [v, d] : degree_of) REQUIRE(d == 2);
      // Contractible: trivial reduced homology over Z.
      auto h = grouptop::stage_report(s, CoefficientRing::integers(), false,
                                      false);
      REQUIRE(h.degrees[0] == deg(1));
      REQUIRE(h.degrees[1] == deg(0));
      REQUIRE(h.degrees[2] == deg(0));
    }
  }
}

TEST_CASE("stage replacement", "[pontryagin]") {
  SECTION("one triangle becomes the nine-triangle band") {
    PontryaginStage s0 = grouptop::triangulated_disk(1);
    PontryaginStage s1 = grouptop::next_stage(s0);
    REQUIRE(s1.generation == 1);
    REQUIRE(count(s1, 0) == 6);
    REQUIRE(count(s1, 1) == 15);
    REQUIRE(count(s1, 2) == 9);
    REQUIRE(s1.complex.euler_characteristic() == 0);
    REQUIRE(s1.boundary_mark == s0.boundary_mark);
    REQUIRE(s1.complex.has_subcomplex(s1.boundary_mark));
    // One-sided: H_1 of the band is Z, absolute H_2 vanishes.
    auto h = grouptop::stage_report(s1, CoefficientRing::integers(), false,
                                    false);
    REQUIRE(h.degrees[1] == deg(1));
    REQUIRE(h.degrees[2] == deg(0));
    // Registry: the replaced triangle maps to nine faces of the complex.
    REQUIRE(s1.patch_registry.size() == 1);
    const auto& patch = s1.patch_registry.at({0, 1, 2});
    REQUIRE(patch.size() == 9);
    for (const auto& f : patch) REQUIRE(s1.complex.contains(f));
  }

  SECTION("count recurrences v+3f, e+12f, 9f and the euler drop") {
    for (std::size_t n : {1u, 2u, 3u}) {
      PontryaginStage s = grouptop::triangulated_disk(n);
      for (int g = 0; g < 2; ++g) {
        std::size_t v = count(s, 0), e = count(s, 1), f = count(s, 2);
        long long chi = s.complex.euler_characteristic();
        PontryaginStage t = grouptop::next_stage(s);
        REQUIRE(count(t, 0) == v + 3 * f);
        REQUIRE(count(t, 1) == e + 12 * f);
        REQUIRE(count(t, 2) == 9 * f);
        REQUIRE(t.complex.euler_characteristic() ==
                chi - static_cast<long long>(f));
        REQUIRE(t.generation == s.generation + 1);
        s = std::move(t);
      }
    }
  }

  SECTION("patch interiors are disjoint and stay off the boundary") {
    PontryaginStage s1 = grouptop::next_stage(grouptop::triangulated_disk(3));
    REQUIRE(s1.patch_registry.size() == 3);
    std::set<std::uint32_t> seen_interior;
    std::set<std::uint32_t> marked;
    for (const auto& v : s1.boundary_mark.simplices(0)) marked.insert(v[0]);
    for (const auto& [sigma, patch] : s1.patch_registry) {
      std::set<std::uint32_t> interior;
      for (const auto& f : patch)
        for (std::uint32_t v : f)
          if (v != sigma[0] && v != sigma[1] && v != sigma[2])
            interior.insert(v);
      REQUIRE(interior.size() == 3);
      for (std::uint32_t v : interior) {
        REQUIRE_FALSE(seen_interior.count(v));
        REQUIRE_FALSE(marked.count(v));
        seen_interior.insert(v);
      }
    }
  }

  SECTION("every stage triangle lies in exactly one patch") {
    PontryaginStage s1 = grouptop::next_stage(grouptop::triangulated_disk(2));
    std::size_t total = 0;
    std::set<std::vector<std::uint32_t>> all;
    for (const auto& [sigma, patch] : s1.patch_registry) {
      total += patch.size();
      all.insert(patch.begin(), patch.end());
    }
    REQUIRE(total == count(s1, 2));
    REQUIRE(all.size() == total);
  }
}

TEST_CASE("coefficient dichotomy", "[pontryagin]") {
  SECTION("relative class survives mod 2 and dies mod 3") {
    PontryaginStage s0 = grouptop::triangulated_disk(1);
    PontryaginStage s1 = grouptop::next_stage(s0);
    auto z_rel = grouptop::stage_report(s1, CoefficientRing::integers(), true);
    REQUIRE(z_rel.degrees[2] == deg(0, {2}));
    auto m3_s0 = grouptop::stage_report(s0, CoefficientRing::modular(3), true);
    REQUIRE(m3_s0.degrees[2] == deg(1));
    auto m3_s1 = grouptop::stage_report(s1, CoefficientRing::modular(3), true);
    REQUIRE(m3_s1.degrees[2] == deg(0));
    auto m2_s1 = grouptop::stage_report(s1, CoefficientRing::modular(2), true);
    REQUIRE(m2_s1.degrees[2] == deg(1));
  }

  SECTION("fate tables") {
    auto mod2 = grouptop::rel_class_fate(1, 2, Int(2));
    REQUIRE(mod2.rows.size() == 3);
    for (unsigned g = 0; g < 3; ++g) {
      REQUIRE(mod2.rows[g].generation == g);
      REQUIRE(mod2.rows[g].dim == 1);
    }
    REQUIRE(mod2.rows[2].faces == 81);

    auto mod3 = grouptop::rel_class_fate(1, 2, Int(3));
    REQUIRE(mod3.rows[0].dim == 1);
    REQUIRE(mod3.rows[1].dim == 0);
    REQUIRE(mod3.rows[2].dim == 0);

    // Generation 0 alone: the disk's relative class is there for every p.
    for (long p : {2L, 3L, 5L, 7L}) {
      auto t = grouptop::rel_class_fate(3, 0, Int(p));
      REQUIRE(t.rows.size() == 1);
      REQUIRE(t.rows[0].dim == 1);
    }
  }

  SECTION("fate table validation") {
    REQUIRE_THROWS_AS(grouptop::rel_class_fate(1, 1, Int(4)), Error);
    REQUIRE_THROWS_AS(grouptop::rel_class_fate(1, 1, Int(1)), Error);
    try {
      grouptop::rel_class_fate(2, 3, Int(2), 100);
      FAIL("cap should have tripped");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::Resource);
    }
  }

  SECTION("no orientation class and only even torsion from generation one") {
    for (std::size_t n : {1u, 2u}) {
      PontryaginStage s = grouptop::triangulated_disk(n);
      for (int g = 1; g <= 2; ++g) {
        s = grouptop::next_stage(s);
        auto habs = grouptop::stage_report(s, CoefficientRing::integers(),
                                           false, false);
        REQUIRE(habs.degrees[2] == deg(0));
        auto hrel = grouptop::stage_report(s, CoefficientRing::integers(),
                                           true, false);
        for (const Int& d : hrel.degrees[1].torsion)
          for (long odd : {3L, 5L, 7L}) REQUIRE(d % odd != 0);
        REQUIRE_FALSE(hrel.degrees[1].torsion.empty());
      }
    }
  }
}
