/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "grouptop/abelian.hpp"
#include "grouptop/presentation.hpp"
#include "grouptop/simplicial.hpp"

using grouptop::FgAbelianGroup;
using grouptop::Int;
using grouptop::Presentation;
using grouptop::SimplicialComplex;

namespace {

std::string slurp(const std::string& relative) {
  std::ifstream in(std::string(GROUPTOP_CORPUS_DIR) + "/" + relative);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FgAbelianGroup abelianization_of(const std::string& file) {
  Presentation p = grouptop::parse_presentation(slurp(file));
  return grouptop::cokernel_of_rows(grouptop::abelianized_relation_matrix(p),
                                    p.generator_count());
}

FgAbelianGroup grp(std::size_t rank, std::vector<Int> factors) {
  return FgAbelianGroup(rank, std::move(factors));
}

}  // namespace

TEST_CASE("every bundled presentation parses to its documented abelianization",
          "[corpus]") {
  REQUIRE(abelianization_of("gamma1.grp") == grp(0, {Int(2), Int(2), Int(4)}));
  REQUIRE(abelianization_of("gamma2.grp") == grp(0, {Int(4), Int(4)}));
  REQUIRE(abelianization_of("dinf.grp") == grp(0, {Int(2), Int(2)}));
  REQUIRE(abelianization_of("s3.grp") == grp(0, {Int(2)}));
  REQUIRE(abelianization_of("s4.grp") == grp(0, {Int(2)}));
  REQUIRE(abelianization_of("a4.grp") == grp(0, {Int(3)}));
  REQUIRE(abelianization_of("a5.grp").is_trivial());
  REQUIRE(abelianization_of("d4.grp") == grp(0, {Int(2), Int(2)}));
  REQUIRE(abelianization_of("q8.grp") == grp(0, {Int(2), Int(2)}));
  REQUIRE(abelianization_of("heis27.grp") == grp(0, {Int(3), Int(3)}));
}

TEST_CASE("every bundled complex loads with the right shape", "[corpus]") {
  SimplicialComplex s2 =
      SimplicialComplex::parse_json(slurp("complexes/s2.json"));
  REQUIRE(s2.euler_characteristic() == 2);

  SimplicialComplex rp2 =
      SimplicialComplex::parse_json(slurp("complexes/rp2_6.json"));
  REQUIRE(rp2.euler_characteristic() == 1);
  REQUIRE(rp2.simplices(1).size() == 15);
  auto h = grouptop::homology(grouptop::build_chain_complex(
      rp2, grouptop::CoefficientRing::integers()));
  REQUIRE(h.degrees[1].torsion == std::vector<Int>{Int(2)});

  SimplicialComplex mobius =
      SimplicialComplex::parse_json(slurp("complexes/mobius.json"));
  SimplicialComplex boundary =
      SimplicialComplex::parse_json(slurp("complexes/mobius_boundary.json"));
  REQUIRE(mobius.euler_characteristic() == 0);
  REQUIRE(mobius.simplices(2).size() == 9);
  REQUIRE(mobius.has_subcomplex(boundary));
  REQUIRE(rp2.has_subcomplex(mobius));

  SimplicialComplex torus =
      SimplicialComplex::parse_json(slurp("complexes/torus_7.json"));
  REQUIRE(torus.euler_characteristic() == 0);
  REQUIRE(torus.simplices(2).size() == 14);
  auto ht = grouptop::homology(grouptop::build_chain_complex(
      torus, grouptop::CoefficientRing::integers()));
  REQUIRE(ht.degrees[1].free_rank == 2);
  REQUIRE(ht.degrees[1].torsion.empty());
  REQUIRE(ht.degrees[2].free_rank == 1);
}
