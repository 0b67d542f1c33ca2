/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/pontryagin.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "grouptop/error.hpp"

namespace grouptop {

namespace {

/// The band patch on template labels 0..5: the 6-vertex projective-plane
/// triangulation minus the face {0,1,2}.  Its boundary is exactly the
/// 3-cycle on {0,1,2}, so relabeling 0,1,2 to a triangle's vertices glues
/// it in without touching any neighboring simplex; labels 3,4,5 become
/// fresh interior vertices.  Every patch face meets the interior, which
/// keeps faces from distinct patches distinct.
constexpr std::array<std::array<std::uint32_t, 3>, 9> kPatchFaces = {{
    {0, 1, 3},
    {0, 2, 4},
    {0, 3, 5},
    {0, 4, 5},
    {1, 2, 5},
    {1, 3, 4},
    {1, 4, 5},
    {2, 3, 4},
    {2, 3, 5},
}};

}  // namespace

PontryaginStage triangulated_disk(std::size_t n) {
  if (n == 0)
    throw Error(ErrorKind::Domain, "a fan disk needs at least one triangle");

  std::vector<std::vector<std::uint32_t>> faces;
  std::vector<std::vector<std::uint32_t>> rim;
  std::size_t vertices;
  if (n <= 2) {
    // Open fan on a rim path: too few triangles for the rim to close.
    vertices = n + 2;
    for (std::uint32_t i = 1; i <= n; ++i) {
      faces.push_back({0, i, i + 1});
      rim.push_back({i, i + 1});
    }
    rim.push_back({0, 1});
    rim.push_back({0, static_cast<std::uint32_t>(n + 1)});
  } else {
    // Closed fan: hub 0, rim cycle 1..n.
    vertices = n + 1;
    for (std::uint32_t i = 1; i < n; ++i) {
      faces.push_back({0, i, i + 1});
      rim.push_back({i, i + 1});
    }
    faces.push_back({0, static_cast<std::uint32_t>(n), 1});
    rim.push_back({1, static_cast<std::uint32_t>(n)});
  }

  PontryaginStage s;
  s.complex = SimplicialComplex(vertices, faces);
  s.boundary_mark = SimplicialComplex(vertices, rim);
  return s;
}

PontryaginStage next_stage(const PontryaginStage& s) {
  const auto& old_faces = s.complex.simplices(2);
  std::uint32_t fresh = static_cast<std::uint32_t>(s.complex.vertex_count());

  std::vector<std::vector<std::uint32_t>> faces;
  faces.reserve(old_faces.size() * kPatchFaces.size());
  std::map<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>>
      registry;
  for (const auto& sigma : old_faces) {
    std::array<std::uint32_t, 6> label = {sigma[0], sigma[1],    sigma[2],
                                          fresh,    fresh + 1,   fresh + 2};
    fresh += 3;
    std::vector<std::vector<std::uint32_t>> patch;
    patch.reserve(kPatchFaces.size());
    for (const auto& f : kPatchFaces) {
      std::vector<std::uint32_t> mapped = {label[f[0]], label[f[1]],
                                           label[f[2]]};
      std::sort(mapped.begin(), mapped.end());
      faces.push_back(mapped);
      patch.push_back(std::move(mapped));
    }
    registry.emplace(sigma, std::move(patch));
  }

  // Every old edge lies on some replaced triangle and every triangle's
  // edge cycle survives inside its patch, so downward closure of the
  // patch faces reproduces the whole old 1-skeleton; in particular the
  // marked boundary carries over verbatim.
  PontryaginStage next;
  next.complex = SimplicialComplex(fresh, faces);
  next.boundary_mark = s.boundary_mark;
  next.generation = s.generation + 1;
  next.patch_registry = std::move(registry);
  return next;
}

CohomologyReport stage_report(const PontryaginStage& s,
                              const CoefficientRing& ring,
                              bool relative_to_boundary, bool cochain) {
  std::optional<SimplicialComplex> rel;
  if (relative_to_boundary) rel = s.boundary_mark;
  ChainComplexData c = build_chain_complex(s.complex, ring, rel);
  return cochain ? cohomology(c) : homology(c);
}

FateTable rel_class_fate(std::size_t n, unsigned generations, const Int& p,
                         std::size_t simplex_cap) {
  if (p < 2 || !is_prime(p))
    throw Error(ErrorKind::Domain,
                "fate tables need a prime modulus, got " + p.get_str());
  Int final_faces;
  mpz_ui_pow_ui(final_faces.get_mpz_t(), 9, generations);
  final_faces *= static_cast<unsigned long>(n);
  if (final_faces > static_cast<unsigned long>(simplex_cap))
    throw Error(ErrorKind::Resource,
                "stage " + std::to_string(generations) + " would have " +
                    final_faces.get_str() +
                    " triangles, past the simplex cap of " +
                    std::to_string(simplex_cap));

  FateTable table;
  table.n = n;
  table.p = p;
  PontryaginStage stage = triangulated_disk(n);
  for (unsigned g = 0;; ++g) {
    CohomologyReport r =
        stage_report(stage, CoefficientRing::modular(p), true, true);
    // Z/p is a field, so the whole degree is free_rank (torsion is empty).
    table.rows.push_back(
        FateRow{g, stage.complex.simplices(2).size(), r.degrees[2].free_rank});
    if (g == generations) break;
    stage = next_stage(stage);
  }
  return table;
}

}  // namespace grouptop
