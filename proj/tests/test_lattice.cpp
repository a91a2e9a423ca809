#include "doctest.h"
#include "forkalg/lattice.hpp"

#include <random>

using namespace forkalg;

namespace {

ZMat random_mat(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ZMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = d(rng);
  return m;
}

bool is_column_hnf(const ZMat& h) {
  // Pivot rows strictly increase, pivots positive, entries to the left
  // of a pivot in its row lie in [0, pivot).
  int prev_row = -1;
  for (int c = 0; c < h.cols; ++c) {
    int r = 0;
    while (r < h.rows && h.at(r, c) == 0) ++r;
    if (r == h.rows) return false;  // zero columns must be dropped
    if (r <= prev_row) return false;
    if (h.at(r, c) <= 0) return false;
    for (int c2 = 0; c2 < c; ++c2)
      if (h.at(r, c2) < 0 || h.at(r, c2) >= h.at(r, c)) return false;
    prev_row = r;
  }
  return true;
}

}  // namespace

TEST_CASE("hermite form shape and transform") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + (int)(rng() % 5), cols = 1 + (int)(rng() % 6);
    ZMat a = random_mat(rng, rows, cols, -7, 7);

    ZMat h = hnf_cols(a);
    CHECK(is_column_hnf(h));

    ZMat u;
    ZMat hu = hnf_cols_transform(a, u);
    CHECK(a * u == hu);
    // Same lattice either way.
    CHECK(lattice_equal_cols(h, a));
    CHECK(lattice_equal_cols(hu, a));
  }
}

TEST_CASE("hermite form is a lattice invariant") {
  std::mt19937 rng(7151);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + (int)(rng() % 4), cols = 2 + (int)(rng() % 4);
    ZMat a = random_mat(rng, rows, cols, -5, 5);

    // Column operations do not change the lattice or its normal form.
    ZMat b = a;
    b.swap_cols(0, b.cols - 1);
    b.negate_col(0);
    b.addmul_col(1, 0, Int(3));
    CHECK(hnf_cols(a) == hnf_cols(b));
    CHECK(lattice_equal_cols(a, b));

    // Appending a lattice member changes nothing either.
    std::vector<Int> comb(rows, 0);
    for (int r = 0; r < rows; ++r)
      comb[r] = a.at(r, 0) * 2 - a.at(r, b.cols - 1);
    ZMat wide(rows, a.cols + 1);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < a.cols; ++c) wide.at(r, c) = a.at(r, c);
      wide.at(r, a.cols) = comb[r];
    }
    CHECK(hnf_cols(wide) == hnf_cols(a));
  }
}

TEST_CASE("solving returns exact witnesses") {
  std::mt19937 rng(99123);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + (int)(rng() % 5), cols = 1 + (int)(rng() % 5);
    ZMat a = random_mat(rng, rows, cols, -6, 6);

    // Build a right-hand side that is certainly in the lattice.
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<Int> s(cols);
    for (auto& v : s) v = d(rng);
    std::vector<Int> p(rows, 0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) p[r] += a.at(r, c) * s[c];

    auto sol = solve_cols(a, p);
    REQUIRE(sol.has_value());
    for (int r = 0; r < rows; ++r) {
      Int acc = 0;
      for (int c = 0; c < cols; ++c) acc += a.at(r, c) * (*sol)[c];
      CHECK(acc == p[r]);
    }
  }

  SUBCASE("membership failures are detected") {
    ZMat a(2, 1);
    a.at(0, 0) = 2;
    a.at(1, 0) = 0;
    CHECK_FALSE(solve_cols(a, {1, 0}).has_value());  // odd multiples missing
    CHECK_FALSE(solve_cols(a, {2, 1}).has_value());  // off the line
    CHECK(solve_cols(a, {-4, 0}).has_value());
  }
}

TEST_CASE("factored solver matches one-shot solving") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + (int)(rng() % 4), cols = 1 + (int)(rng() % 5);
    ZMat a = random_mat(rng, rows, cols, -5, 5);
    HnfSolver solver(a);
    std::uniform_int_distribution<int> d(-8, 8);
    for (int shot = 0; shot < 8; ++shot) {
      std::vector<Int> p(rows);
      for (auto& v : p) v = d(rng);
      auto s1 = solver.solve(p);
      auto s2 = solve_cols(a, p);
      CHECK(s1.has_value() == s2.has_value());
      if (s1) {
        for (int r = 0; r < rows; ++r) {
          Int acc = 0;
          for (int c = 0; c < cols; ++c) acc += a.at(r, c) * (*s1)[c];
          CHECK(acc == p[r]);
        }
      }
    }
  }
}

TEST_CASE("kernel columns annihilate and span") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + (int)(rng() % 4), cols = 1 + (int)(rng() % 5);
    ZMat a = random_mat(rng, rows, cols, -4, 4);
    ZMat ker = kernel_cols(a);

    // Every kernel column is annihilated.
    for (int c = 0; c < ker.cols; ++c)
      for (int r = 0; r < rows; ++r) {
        Int acc = 0;
        for (int j = 0; j < cols; ++j) acc += a.at(r, j) * ker.at(j, c);
        CHECK(acc == 0);
      }

    // Rank-nullity over Q.
    HnfSolver solver(a);
    CHECK(ker.cols + solver.rank() == cols);

    // The kernel lattice is saturated: any integer vector annihilated
    // by a must be an integer combination of the kernel columns.
    std::uniform_int_distribution<int> d(-3, 3);
    for (int shot = 0; shot < 6; ++shot) {
      std::vector<Int> t(ker.cols);
      for (auto& v : t) v = d(rng);
      std::vector<Int> member(cols, 0);
      for (int j = 0; j < cols; ++j)
        for (int c = 0; c < ker.cols; ++c) member[j] += ker.at(j, c) * t[c];
      if (ker.cols > 0) CHECK(solve_cols(ker, member).has_value());
    }
  }
}

TEST_CASE("kernel is saturated, not just a finite-index sublattice") {
  // a = (2 -2) kills (1,1); a naive echelon kernel could return (2,2).
  ZMat a(1, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = -2;
  ZMat ker = kernel_cols(a);
  REQUIRE(ker.cols == 1);
  CHECK(solve_cols(ker, {1, 1}).has_value());

  ZMat b(2, 3);
  // Rows (3 0 3), (0 5 5); (1, 1, -1) generates the kernel.
  b.at(0, 0) = 3; b.at(0, 1) = 0; b.at(0, 2) = 3;
  b.at(1, 0) = 0; b.at(1, 1) = 5; b.at(1, 2) = 5;
  ZMat kb = kernel_cols(b);
  REQUIRE(kb.cols == 1);
  CHECK(solve_cols(kb, {1, 1, -1}).has_value());
}

TEST_CASE("spanning the full ambient lattice") {
  CHECK(spans_everything(ZMat::ident(4)));

  ZMat a = ZMat::ident(3);
  a.at(2, 2) = 2;
  CHECK_FALSE(spans_everything(a));

  // Unimodular column operations preserve the property.
  ZMat b = ZMat::ident(3);
  b.addmul_col(0, 2, Int(-5));
  b.swap_cols(1, 2);
  CHECK(spans_everything(b));
}
