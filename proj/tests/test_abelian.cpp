/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grouptop/abelian.hpp"
#include "grouptop/error.hpp"
#include "grouptop/presentation.hpp"

using grouptop::abelianization;
using grouptop::Error;
using grouptop::FgAbelianGroup;
using grouptop::Int;
using grouptop::is_quotient_of;
using grouptop::parse_presentation;
using grouptop::Presentation;
using grouptop::tensor_product;
using grouptop::torsion_divisibility;

namespace {

FgAbelianGroup grp(std::size_t rank, std::vector<long> factors) {
  std::vector<Int> f(factors.begin(), factors.end());
  return FgAbelianGroup(rank, std::move(f));
}

}  // namespace

TEST_CASE("canonical form", "[abelian]") {
  REQUIRE(FgAbelianGroup().is_trivial());
  REQUIRE(FgAbelianGroup().to_text() == "0");
  REQUIRE(grp(2, {}).to_text() == "Z^2");
  REQUIRE(grp(1, {2, 2}).to_text() == "Z ⊕ Z/2 ⊕ Z/2");
  REQUIRE(grp(0, {4, 4}).to_text() == "Z/4 ⊕ Z/4");
  REQUIRE(grp(0, {4, 4}).torsion_order() == 16);

  REQUIRE_THROWS_AS(grp(0, {1}), Error);
  REQUIRE_THROWS_AS(grp(0, {4, 6}), Error);

  // Z/6 x Z/4 = Z/2 x Z/12 in canonical form.
  FgAbelianGroup g = FgAbelianGroup::from_cyclic_orders({Int(6), Int(4)});
  REQUIRE(g == grp(0, {2, 12}));
  // CRT collapse: coprime orders merge into one factor.
  REQUIRE(FgAbelianGroup::from_cyclic_orders({Int(3), Int(4)}) ==
          grp(0, {12}));
  REQUIRE(FgAbelianGroup::from_cyclic_orders({Int(0), Int(1), Int(0)}) ==
          grp(2, {}));
  REQUIRE(FgAbelianGroup::from_cyclic_orders({}) == FgAbelianGroup());

  // from_cyclic_orders is invariant under permutation.
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> ord(0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> orders;
    for (int i = 0; i < 5; ++i) orders.push_back(Int(ord(rng)));
    FgAbelianGroup a = FgAbelianGroup::from_cyclic_orders(orders);
    std::shuffle(orders.begin(), orders.end(), rng);
    REQUIRE(FgAbelianGroup::from_cyclic_orders(orders) == a);
    // Total order is preserved when finite.
    if (a.is_finite()) {
      Int prod = 1;
      bool infinite = false;
      for (const Int& o : orders) {
        if (o == 0) infinite = true;
        else prod *= o;
      }
      REQUIRE_FALSE(infinite);
      REQUIRE(a.torsion_order() == prod);
    }
  }
}

TEST_CASE("abelianization of corpus presentations", "[abelian]") {
  REQUIRE(abelianization(parse_presentation(
              "< x, y, z | x^z = x^-1, y^z = y^-1, [x,y] = z^4 >")) ==
          grp(0, {2, 2, 4}));
  REQUIRE(abelianization(parse_presentation(
              "< x, y | y^2, y*x*y^-1 = x^-1 >")) == grp(0, {2, 2}));
  REQUIRE(abelianization(parse_presentation("< a, b | a^2, b^2, (a*b)^3 >")) ==
          grp(0, {2}));
  REQUIRE(abelianization(parse_presentation("< x, y | >")) == grp(2, {}));
  REQUIRE(abelianization(parse_presentation("< | >")) == FgAbelianGroup());
  REQUIRE(abelianization(parse_presentation(
              "< i, j | i^4, i^2 = j^2, j*i*j^-1 = i^-1 >")) ==
          grp(0, {2, 2}));
  // Flat 3-manifold example: all six abelian invariants collapse to 4, 4.
  Presentation g2 = parse_presentation(R"(
      < a, b, c, x, y, z |
        c*b*a = x*y, a^2 = x, a*y*a^-1 = y^-1, a*z*a^-1 = z^-1,
        b*x*b^-1 = x^-1, b^2 = y, b*z*b^-1 = z^-1,
        c*x*c^-1 = x^-1, c*y*c^-1 = y^-1, c^2 = z >)");
  REQUIRE(abelianization(g2) == grp(0, {4, 4}));
  REQUIRE(abelianization(g2).to_text() == "Z/4 ⊕ Z/4");
}

TEST_CASE("tensor products", "[abelian]") {
  FgAbelianGroup z4z = grp(1, {4});
  FgAbelianGroup z6 = grp(0, {6});
  REQUIRE(tensor_product(z4z, z6) == grp(0, {2, 6}));
  REQUIRE(tensor_product(z6, z4z) == grp(0, {2, 6}));

  FgAbelianGroup z = grp(1, {});
  REQUIRE(tensor_product(z, z) == z);
  REQUIRE(tensor_product(z, z6) == z6);
  REQUIRE(tensor_product(grp(0, {2}), grp(0, {3})) == FgAbelianGroup());
  REQUIRE(tensor_product(FgAbelianGroup(), z6) == FgAbelianGroup());

  // Commutativity and distributivity over direct sum on random inputs.
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> ord(0, 9);
  auto random_group = [&](int parts) {
    std::vector<Int> orders;
    for (int i = 0; i < parts; ++i) orders.push_back(Int(ord(rng)));
    return FgAbelianGroup::from_cyclic_orders(orders);
  };
  auto direct_sum = [](const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> orders(a.free_rank() + b.free_rank(), 0);
    for (const Int& d : a.invariant_factors()) orders.push_back(d);
    for (const Int& d : b.invariant_factors()) orders.push_back(d);
    return FgAbelianGroup::from_cyclic_orders(orders);
  };
  for (int trial = 0; trial < 40; ++trial) {
    FgAbelianGroup a = random_group(2), b = random_group(2), c = random_group(2);
    REQUIRE(tensor_product(a, b) == tensor_product(b, a));
    REQUIRE(tensor_product(a, direct_sum(b, c)) ==
            direct_sum(tensor_product(a, b), tensor_product(a, c)));
  }
}

TEST_CASE("torsion and divisibility report", "[abelian]") {
  auto r = torsion_divisibility(grp(0, {4, 4}), Int(2));
  REQUIRE_FALSE(r.p_divisible);
  REQUIRE(r.has_p_torsion);
  REQUIRE(r.is_p_group);
  REQUIRE(r.is_torsion);

  r = torsion_divisibility(grp(0, {4, 4}), Int(3));
  REQUIRE(r.p_divisible);
  REQUIRE_FALSE(r.has_p_torsion);
  REQUIRE_FALSE(r.is_p_group);
  REQUIRE(r.is_torsion);

  r = torsion_divisibility(grp(1, {2}), Int(3));
  REQUIRE_FALSE(r.p_divisible);
  REQUIRE_FALSE(r.has_p_torsion);
  REQUIRE_FALSE(r.is_p_group);
  REQUIRE_FALSE(r.is_torsion);

  r = torsion_divisibility(grp(0, {6}), Int(2));
  REQUIRE(r.has_p_torsion);
  REQUIRE_FALSE(r.is_p_group);

  r = torsion_divisibility(FgAbelianGroup(), Int(5));
  REQUIRE(r.p_divisible);
  REQUIRE(r.is_p_group);

  REQUIRE_THROWS_AS(torsion_divisibility(grp(0, {2}), Int(6)), Error);
}

TEST_CASE("quotient criterion", "[abelian]") {
  REQUIRE(is_quotient_of(grp(0, {2}), grp(0, {4})));
  REQUIRE_FALSE(is_quotient_of(grp(0, {4}), grp(0, {2})));
  REQUIRE_FALSE(is_quotient_of(grp(0, {2, 2}), grp(0, {4})));
  REQUIRE(is_quotient_of(grp(0, {2, 4}), grp(0, {2, 8})));
  REQUIRE_FALSE(is_quotient_of(grp(0, {4, 4}), grp(0, {2, 8})));
  REQUIRE(is_quotient_of(grp(0, {8}), grp(1, {})));
  REQUIRE(is_quotient_of(grp(0, {4, 8}), grp(1, {4})));
  REQUIRE_FALSE(is_quotient_of(grp(0, {6, 6}), grp(1, {4})));
  REQUIRE(is_quotient_of(FgAbelianGroup(), grp(0, {2})));
  REQUIRE(is_quotient_of(grp(1, {}), grp(2, {})));
  REQUIRE_FALSE(is_quotient_of(grp(2, {}), grp(1, {2, 2})));
}

TEST_CASE("primes and factorization", "[abelian]") {
  REQUIRE(grouptop::is_prime(Int(2)));
  REQUIRE(grouptop::is_prime(Int(97)));
  REQUIRE_FALSE(grouptop::is_prime(Int(1)));
  REQUIRE_FALSE(grouptop::is_prime(Int(91)));

  auto f = grouptop::factorize(Int(360));
  REQUIRE(f == std::vector<std::pair<Int, unsigned>>{
                   {Int(2), 3}, {Int(3), 2}, {Int(5), 1}});
  REQUIRE(grouptop::factorize(Int(1)).empty());
  REQUIRE_THROWS_AS(grouptop::factorize(Int(0)), Error);
}
