/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "grouptop/error.hpp"
#include "grouptop/intmatrix.hpp"

using grouptop::Int;
using grouptop::IntMatrix;
using grouptop::SmithDecomposition;
using grouptop::SmithSolver;
using grouptop::smith_diagonal;
using grouptop::smith_normal_form;

namespace {

// Structural checks every Smith decomposition must satisfy.
void check_smith_postconditions(const IntMatrix& m,
                                const SmithDecomposition& d) {
  REQUIRE(d.s.rows() == m.rows());
  REQUIRE(d.s.cols() == m.cols());
  REQUIRE(d.u.rows() == m.rows());
  REQUIRE(d.u.cols() == m.rows());
  REQUIRE(d.v.rows() == m.cols());
  REQUIRE(d.v.cols() == m.cols());
  Int du = d.u.determinant();
  Int dv = d.v.determinant();
  REQUIRE(abs(du) == 1);
  REQUIRE(abs(dv) == 1);
  REQUIRE(d.u * m * d.v == d.s);
  for (std::size_t i = 0; i < d.s.rows(); ++i)
    for (std::size_t j = 0; j < d.s.cols(); ++j)
      if (i != j) REQUIRE(d.s.at(i, j) == 0);
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) REQUIRE(d.s.at(i, i) >= 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Int& a = d.s.at(i, i);
    const Int& b = d.s.at(i + 1, i + 1);
    if (a == 0) {
      REQUIRE(b == 0);
    } else {
      REQUIRE(b % a == 0);
    }
  }
}

void collect_minor_indices(std::size_t n, std::size_t k,
                           std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Independent characterization of the Smith diagonal: the k-th
// determinantal divisor is the gcd of all k x k minors, and the k-th
// diagonal entry is the ratio of consecutive divisors.
std::vector<Int> diagonal_from_minor_gcds(const IntMatrix& m) {
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Int> diag(n, 0);
  Int prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    collect_minor_indices(m.rows(), k, row_sets);
    collect_minor_indices(m.cols(), k, col_sets);
    Int g = 0;
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub.at(i, j) = m.at(rs[i], cs[j]);
        Int det = sub.determinant();
        g = gcd(g, det);
      }
    if (g == 0) break;
    diag[k - 1] = g / prev;
    prev = g;
  }
  return diag;
}

}  // namespace

TEST_CASE("matrix basics", "[intmatrix]") {
  IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  REQUIRE(a.rows() == 2);
  REQUIRE(a.cols() == 2);
  REQUIRE(a.at(1, 0) == 3);
  REQUIRE(a.transposed().at(0, 1) == 3);

  IntMatrix id = IntMatrix::identity(2);
  REQUIRE(a * id == a);
  REQUIRE(id * a == a);

  IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  REQUIRE((a * b) == IntMatrix::from_rows({{2, 1}, {4, 3}}));

  REQUIRE(grouptop::hcat(a, b) ==
          IntMatrix::from_rows({{1, 2, 0, 1}, {3, 4, 1, 0}}));
  REQUIRE(grouptop::vcat(a, b) ==
          IntMatrix::from_rows({{1, 2}, {3, 4}, {0, 1}, {1, 0}}));

  std::vector<Int> x{Int(1), Int(-1)};
  std::vector<Int> y = grouptop::matvec(a, x);
  REQUIRE(y == std::vector<Int>{Int(-1), Int(-1)});
}

TEST_CASE("determinant", "[intmatrix]") {
  REQUIRE(IntMatrix().determinant() == 1);
  REQUIRE(IntMatrix::from_rows({{5}}).determinant() == 5);
  REQUIRE(IntMatrix::from_rows({{1, 2}, {3, 4}}).determinant() == -2);
  REQUIRE(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})
              .determinant() == 0);
  REQUIRE(IntMatrix::from_rows({{2, 0, 1}, {0, 3, 0}, {1, 0, 1}})
              .determinant() == 3);
  REQUIRE(IntMatrix::identity(6).determinant() == 1);
  REQUIRE_THROWS_AS(IntMatrix(2, 3).determinant(), grouptop::Error);
}

TEST_CASE("smith normal form on frozen cases", "[intmatrix]") {
  struct Case {
    IntMatrix m;
    std::vector<long> diag;
  };
  std::vector<Case> cases;
  cases.push_back({IntMatrix::from_rows({{4, 6}, {6, 4}}), {2, 10}});
  cases.push_back(
      {IntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, -4}}), {2, 2, 4}});
  cases.push_back({IntMatrix::from_rows({{0, 2}, {2, 0}}), {2, 2}});
  cases.push_back({IntMatrix::identity(3), {1, 1, 1}});
  cases.push_back({IntMatrix(2, 2), {0, 0}});
  cases.push_back({IntMatrix::from_rows({{6, 4, 8}}), {2}});
  cases.push_back({IntMatrix::from_rows({{1, 2}, {2, 4}}), {1, 0}});
  // Divisor chain by hand: entry gcd 2, minor gcd 4, determinant 624.
  cases.push_back(
      {IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}),
       {2, 2, 156}});

  for (const auto& c : cases) {
    SmithDecomposition d = smith_normal_form(c.m);
    check_smith_postconditions(c.m, d);
    for (std::size_t i = 0; i < c.diag.size(); ++i)
      REQUIRE(d.s.at(i, i) == c.diag[i]);
  }
}

TEST_CASE("smith diagonal matches determinantal divisors", "[intmatrix]") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    SmithDecomposition d = smith_normal_form(m);
    check_smith_postconditions(m, d);
    std::vector<Int> expect = diagonal_from_minor_gcds(m);
    for (std::size_t i = 0; i < expect.size(); ++i)
      REQUIRE(d.s.at(i, i) == expect[i]);
  }
}

TEST_CASE("smith solver", "[intmatrix]") {
  IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  SmithSolver solver(m);
  REQUIRE(solver.rank() == 2);
  REQUIRE(solver.kernel_basis().cols() == 0);

  auto sol = solver.solve({Int(4), Int(-9)});
  REQUIRE(sol.has_value());
  REQUIRE(grouptop::matvec(m, *sol) == std::vector<Int>{Int(4), Int(-9)});
  REQUIRE_FALSE(solver.solve({Int(1), Int(3)}).has_value());

  IntMatrix k = IntMatrix::from_rows({{1, 2, 3}});
  SmithSolver ks(k);
  REQUIRE(ks.rank() == 1);
  const IntMatrix& basis = ks.kernel_basis();
  REQUIRE(basis.cols() == 2);
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    std::vector<Int> col = basis.column(j);
    REQUIRE(grouptop::matvec(k, col) == std::vector<Int>{Int(0)});
  }
  // Kernel columns extend to a basis: the full transform v is unimodular,
  // so the two columns are independent and primitive.
  REQUIRE(abs(ks.decomposition().v.determinant()) == 1);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) a.at(i, j) = entry(rng);
    std::vector<Int> x{Int(entry(rng)), Int(entry(rng))};
    std::vector<Int> b = grouptop::matvec(a, x);
    SmithSolver s(a);
    auto found = s.solve(b);
    REQUIRE(found.has_value());
    REQUIRE(grouptop::matvec(a, *found) == b);
  }
}
