/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_SIMPLICIAL_HPP
#define GROUPTOP_SIMPLICIAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouptop/abelian.hpp"
#include "grouptop/intmatrix.hpp"

namespace grouptop {

enum class RingKind { Integers, Rationals, Modular };

/// Coefficient ring for chain complexes: Z, Q, or Z/n with n >= 1.
struct CoefficientRing {
  RingKind kind = RingKind::Integers;
  Int modulus = 0;  ///< meaningful for Modular only

  static CoefficientRing integers() { return {RingKind::Integers, 0}; }
  static CoefficientRing rationals() { return {RingKind::Rationals, 0}; }
  static CoefficientRing modular(Int n);

  std::string to_text() const;  ///< "Z", "Q", "Z/6"
  bool operator==(const CoefficientRing&) const = default;
};

/// Parses "z" / "q" / "z/N" (any letter case).
CoefficientRing parse_coefficient_ring(const std::string& text);

/// Finite abstract simplicial complex on vertices 0..vertex_count-1 with
/// simplices of dimension at most 3.  Input simplices are closed downward;
/// the stored family is canonical (each simplex a sorted vertex tuple,
/// lists lex-sorted per dimension).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  ///< empty complex on zero vertices
  SimplicialComplex(std::size_t vertex_count,
                    const std::vector<std::vector<std::uint32_t>>& simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Largest dimension with a simplex, or -1 for the empty complex.
  int dimension() const;
  /// k-simplices in lex order; k up to 3.
  const std::vector<std::vector<std::uint32_t>>& simplices(std::size_t k) const;
  /// Total number of simplices across dimensions.
  std::size_t simplex_count() const;

  bool contains(std::vector<std::uint32_t> simplex) const;
  /// Every simplex of a appears here (a shares this complex's vertex
  /// numbering).
  bool has_subcomplex(const SimplicialComplex& a) const;

  long long euler_characteristic() const;

  /// {"vertices": n, "simplices": [[...], ...]} with every simplex listed.
  std::string to_json() const;
  static SimplicialComplex parse_json(const std::string& text);

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::array<std::vector<std::vector<std::uint32_t>>, 4> by_dim_;
};

/// Oriented boundary matrices of a complex (or of a pair, when rel cells
/// are quotiented away), with the coefficient ring carried as a tag; the
/// matrices themselves are integral.
struct ChainComplexData {
  CoefficientRing ring;
  bool relative = false;
  /// cells[k]: ordered k-cells indexing the chain group C_k.
  std::array<std::vector<std::vector<std::uint32_t>>, 4> cells;
  /// boundary[k]: C_k -> C_{k-1} with |cells[k-1]| rows and |cells[k]|
  /// columns; boundary[0] has zero rows.
  std::array<IntMatrix, 4> boundary;
};

/// Builds the (relative) chain complex; orientation comes from the global
/// vertex order.  rel must be a subcomplex of k.  The boundary-squared
/// identity is verified before returning.
ChainComplexData build_chain_complex(
    const SimplicialComplex& k, const CoefficientRing& ring,
    const std::optional<SimplicialComplex>& rel = std::nullopt);

/// One degree of a (co)homology report.  Over Z the two fields are the
/// Betti number and the torsion chain.  Over Z/n, free_rank counts the
/// full Z/n summands and torsion lists the factors properly dividing n,
/// so a field gives dimension plus empty torsion.
struct DegreeSummary {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const DegreeSummary&) const = default;
};

struct CohomologyReport {
  CoefficientRing ring;
  bool relative = false;
  bool cochain = false;  ///< true when the report is cohomology
  std::array<DegreeSummary, 4> degrees;
};

CohomologyReport homology(const ChainComplexData& c);
CohomologyReport cohomology(const ChainComplexData& c);

/// Supported short exact coefficient sequences.
enum class TripleKind {
  IntegersModN,  ///< 0 -> Z -(n)-> Z -> Z/n -> 0
  ModPSquared,   ///< 0 -> Z/p -> Z/p^2 -> Z/p -> 0
};

struct CoefficientTriple {
  TripleKind kind = TripleKind::IntegersModN;
  Int n = 2;  ///< the n, or the prime p

  std::string to_text() const;
};

/// One slot of the induced long exact sequence: the cohomology group the
/// slot sits at, the image of the incoming map and the kernel of the
/// outgoing one (as subgroups of it), and whether they agree.
struct BocksteinSlot {
  std::string at;  ///< e.g. "H^1(Z/2)"
  bool exact = false;
  FgAbelianGroup image;
  FgAbelianGroup kernel;
};

struct BocksteinReport {
  CoefficientTriple triple;
  bool relative = false;
  bool exact = false;                ///< all slots exact
  std::vector<BocksteinSlot> slots;  ///< 12 slots, degrees 0..3
  /// Connecting homomorphism data per degree k: its image inside
  /// H^{k+1}(first ring) and its kernel inside H^k(third ring).
  std::array<FgAbelianGroup, 4> connecting_image;
  std::array<FgAbelianGroup, 4> connecting_kernel;
  /// The three cohomology ladders the sequence weaves through.
  CohomologyReport first, middle, third;
};

/// Computes the three cohomology ladders of the coefficient sequence and
/// verifies exactness of the induced long sequence at every slot through
/// degree 3 (the complexes are at most 3-dimensional, so degree 4 is the
/// zero group).  The connecting map is computed on cochains: lift, take
/// the coboundary, divide by the modulus.
BocksteinReport bockstein_check(
    const SimplicialComplex& k, const std::optional<SimplicialComplex>& rel,
    const CoefficientTriple& triple);

}  // namespace grouptop

#endif  // GROUPTOP_SIMPLICIAL_HPP
