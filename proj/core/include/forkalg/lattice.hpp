#pragma once
// Dense integer matrices and column-style Hermite normal form.  All the
// structural checks reduce to statements about column lattices: equality,
// membership, exact solving, kernels, surjectivity onto the ambient Z^r.

#include "forkalg/laurent.hpp"

#include <optional>
#include <vector>

namespace forkalg {

struct ZMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

  Int& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Int& at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static ZMat ident(int n);
  ZMat transpose() const;
  ZMat operator*(const ZMat& o) const;
  bool operator==(const ZMat&) const = default;

  void swap_cols(int i, int j);
  void negate_col(int j);
  void addmul_col(int dst, int src, const Int& q);  // col_dst += q * col_src
  std::vector<Int> col(int j) const;

  // Horizontal concatenation [A | B]; row counts must match.
  static ZMat hcat(const ZMat& A, const ZMat& B);
};

// Column Hermite normal form: echelon columns with positive pivots,
// entries left of a pivot in its row reduced into [0, pivot), zero
// columns dropped.  Canonical for the column lattice.
ZMat hnf_cols(const ZMat& A);

// Same, keeping zero columns and reporting U with H = A * U, U unimodular.
ZMat hnf_cols_transform(const ZMat& A, ZMat& U);

// Factored form of a column lattice, for solving many right-hand sides
// against the same matrix.
class HnfSolver {
 public:
  explicit HnfSolver(const ZMat& A);

  // One integer solution of A s = p, if any.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& p) const;
  int rank() const { return (int)pivots_.size(); }

 private:
  ZMat h_, u_;
  std::vector<std::pair<int, int>> pivots_;  // (row, col), rows increasing
};

// One integer solution of A s = p, if any.
std::optional<std::vector<Int>> solve_cols(const ZMat& A, const std::vector<Int>& p);

// Basis of the full integer kernel {s | A s = 0}, one column per basis vector.
ZMat kernel_cols(const ZMat& A);

bool lattice_contains_cols(const ZMat& A, const ZMat& B);  // cols of B inside col-lattice of A
bool lattice_equal_cols(const ZMat& A, const ZMat& B);

// Column lattice equals all of Z^rows.
bool spans_everything(const ZMat& A);

}  // namespace forkalg
