/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_PONTRYAGIN_HPP
#define GROUPTOP_PONTRYAGIN_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "grouptop/simplicial.hpp"

namespace grouptop {

/// Default ceiling on the number of 2-simplices a stage lineage may grow
/// to.  Face counts multiply by nine per generation, so this is the knob
/// that keeps fate-table requests at desk scale.
constexpr std::size_t kDefaultSimplexCap = 100'000;

/// One finite stage of the degree-two disk tower.  Stage 0 is a
/// triangulated disk whose boundary circle is marked; each later stage
/// replaces every triangle of its predecessor with a nine-triangle band
/// (a one-sided surface patch whose boundary is the triangle's edge
/// cycle).  The marked boundary consists of edges only and is carried
/// through unchanged, so relative computations against it make sense at
/// every generation.
struct PontryaginStage {
  SimplicialComplex complex;
  /// The original disk boundary, a subcomplex of `complex` at every
  /// generation.
  SimplicialComplex boundary_mark;
  unsigned generation = 0;
  /// For generation g+1: each replaced triangle of generation g mapped to
  /// the nine triangles of the band that took its place.  Empty at
  /// generation 0.
  std::map<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>>
      patch_registry;
};

/// Fan triangulation of a disk with n triangles around a hub vertex,
/// generation 0.  For n >= 3 the fan closes up (hub plus n rim vertices);
/// n = 2 is an open fan and n = 1 degenerates to a single triangle with
/// all three edges marked.  Throws Domain for n = 0.
PontryaginStage triangulated_disk(std::size_t n);

/// Replaces every triangle with a fresh band patch: the patch boundary is
/// the triangle's edge cycle and the three interior vertices are new, so
/// patch interiors are disjoint across triangles.  Triangle count
/// multiplies by nine, the Euler characteristic drops by the old triangle
/// count, and the marked boundary is untouched.
PontryaginStage next_stage(const PontryaginStage& s);

/// (Co)homology of the stage complex, relative to the marked boundary
/// when asked.  cochain selects cohomology (the default) versus homology.
CohomologyReport stage_report(const PontryaginStage& s,
                              const CoefficientRing& ring,
                              bool relative_to_boundary, bool cochain = true);

struct FateRow {
  unsigned generation = 0;
  std::size_t faces = 0;  ///< 2-simplices in the stage
  std::size_t dim = 0;    ///< dim H^2(stage, boundary; Z/p)
};

/// How the relative 2-class of the disk fares under repeated degree-two
/// patching, one row per generation.
struct FateTable {
  std::size_t n = 0;  ///< triangles in the generation-0 fan
  Int p = 0;
  std::vector<FateRow> rows;
};

/// Tracks dim H^2(stage_g, boundary; Z/p) for g = 0..generations.  The
/// mod-2 dimension stays 1 forever while any odd prime column drops to 0
/// from generation 1 on.  Throws Domain unless p is prime, and Resource
/// when n * 9^generations would exceed the simplex cap.
FateTable rel_class_fate(std::size_t n, unsigned generations, const Int& p,
                         std::size_t simplex_cap = kDefaultSimplexCap);

}  // namespace grouptop

#endif  // GROUPTOP_PONTRYAGIN_HPP
