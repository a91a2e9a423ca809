#include "forkalg/lattice.hpp"

#include <stdexcept>

namespace forkalg {

ZMat ZMat::ident(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::transpose() const {
  ZMat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

ZMat ZMat::operator*(const ZMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("ZMat: shape mismatch in product");
  ZMat p(rows, o.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      const Int& v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < o.cols; ++c) p.at(r, c) += v * o.at(k, c);
    }
  return p;
}

void ZMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
}

void ZMat::negate_col(int j) {
  for (int r = 0; r < rows; ++r) at(r, j) = -at(r, j);
}

void ZMat::addmul_col(int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < rows; ++r) at(r, dst) += q * at(r, src);
}

std::vector<Int> ZMat::col(int j) const {
  std::vector<Int> v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, j);
  return v;
}

ZMat ZMat::hcat(const ZMat& A, const ZMat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("ZMat: hcat row mismatch");
  ZMat m(A.rows, A.cols + B.cols);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) m.at(r, c) = A.at(r, c);
    for (int c = 0; c < B.cols; ++c) m.at(r, A.cols + c) = B.at(r, c);
  }
  return m;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// In-place column HNF.  Applies every column operation to U as well when
// U is non-null.  Returns the pivot (row, col) list in order.
std::vector<std::pair<int, int>> hnf_inplace(ZMat& H, ZMat* U) {
  std::vector<std::pair<int, int>> pivots;
  int c = 0;
  auto apply_swap = [&](int i, int j) {
    H.swap_cols(i, j);
    if (U) U->swap_cols(i, j);
  };
  auto apply_neg = [&](int j) {
    H.negate_col(j);
    if (U) U->negate_col(j);
  };
  auto apply_addmul = [&](int dst, int src, const Int& q) {
    H.addmul_col(dst, src, q);
    if (U) U->addmul_col(dst, src, q);
  };
  for (int r = 0; r < H.rows && c < H.cols; ++r) {
    // Euclid across the active columns on row r until one survivor remains.
    for (;;) {
      int j0 = -1;
      for (int j = c; j < H.cols; ++j) {
        if (H.at(r, j) == 0) continue;
        if (j0 < 0 || mpz_cmpabs(H.at(r, j).get_mpz_t(), H.at(r, j0).get_mpz_t()) < 0) j0 = j;
      }
      if (j0 < 0) break;
      apply_swap(c, j0);
      if (H.at(r, c) < 0) apply_neg(c);
      bool clean = true;
      for (int j = c + 1; j < H.cols; ++j) {
        if (H.at(r, j) == 0) continue;
        apply_addmul(j, c, -floor_div(H.at(r, j), H.at(r, c)));
        if (H.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(r, c) == 0) continue;
    for (int j = 0; j < c; ++j)
      apply_addmul(j, c, -floor_div(H.at(r, j), H.at(r, c)));
    pivots.emplace_back(r, c);
    ++c;
  }
  return pivots;
}

ZMat drop_zero_cols(const ZMat& H, int keep) {
  ZMat out(H.rows, keep);
  for (int r = 0; r < H.rows; ++r)
    for (int c = 0; c < keep; ++c) out.at(r, c) = H.at(r, c);
  return out;
}

}  // namespace

ZMat hnf_cols(const ZMat& A) {
  ZMat H = A;
  auto pivots = hnf_inplace(H, nullptr);
  return drop_zero_cols(H, (int)pivots.size());
}

ZMat hnf_cols_transform(const ZMat& A, ZMat& U) {
  ZMat H = A;
  U = ZMat::ident(A.cols);
  hnf_inplace(H, &U);
  return H;
}

HnfSolver::HnfSolver(const ZMat& A) : h_(A), u_(ZMat::ident(A.cols)) {
  pivots_ = hnf_inplace(h_, &u_);
}

std::optional<std::vector<Int>> HnfSolver::solve(const std::vector<Int>& p) const {
  if ((int)p.size() != h_.rows) throw std::invalid_argument("HnfSolver: size mismatch");
  std::vector<Int> res = p, t(h_.cols);
  size_t next = 0;
  for (int r = 0; r < h_.rows; ++r) {
    if (next < pivots_.size() && pivots_[next].first == r) {
      int c = pivots_[next].second;
      Int q = res[r] / h_.at(r, c);
      if (q * h_.at(r, c) != res[r]) return std::nullopt;
      if (q != 0)
        for (int rr = r; rr < h_.rows; ++rr) res[rr] -= q * h_.at(rr, c);
      t[c] = q;
      ++next;
    } else if (res[r] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> s(h_.cols);
  for (int i = 0; i < h_.cols; ++i)
    for (int j = 0; j < h_.cols; ++j)
      if (t[j] != 0) s[i] += u_.at(i, j) * t[j];
  return s;
}

std::optional<std::vector<Int>> solve_cols(const ZMat& A, const std::vector<Int>& p) {
  return HnfSolver(A).solve(p);
}

ZMat kernel_cols(const ZMat& A) {
  ZMat H = A, U = ZMat::ident(A.cols);
  auto pivots = hnf_inplace(H, &U);
  int rank = (int)pivots.size();
  ZMat K(A.cols, A.cols - rank);
  for (int i = 0; i < A.cols; ++i)
    for (int j = rank; j < A.cols; ++j) K.at(i, j - rank) = U.at(i, j);
  return K;
}

bool lattice_contains_cols(const ZMat& A, const ZMat& B) {
  HnfSolver solver(A);
  for (int j = 0; j < B.cols; ++j)
    if (!solver.solve(B.col(j))) return false;
  return true;
}

bool lattice_equal_cols(const ZMat& A, const ZMat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("lattice_equal_cols: row mismatch");
  return hnf_cols(A) == hnf_cols(B);
}

bool spans_everything(const ZMat& A) {
  return hnf_cols(A) == ZMat::ident(A.rows);
}

}  // namespace forkalg
