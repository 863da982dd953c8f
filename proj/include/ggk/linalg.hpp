#pragma once

#include <vector>

#include "ggk/scalars.hpp"

namespace ggk {

/* Dense exact linear algebra over an arbitrary field scalar.  Everything is
   plain Gaussian elimination: the matrices arising from string complexes are
   small and sparse enough that exact pivoting is the whole story. */

template <class K>
int row_reduce(Mat<K>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!(m(i, c) == K(0))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    K inv = K(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      K f = m(i, c);
      if (f == K(0)) continue;
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return (int)r;
}

template <class K>
int rank_of(Mat<K> m) {
  return row_reduce(m);
}

/* Columns of the result form a basis of the kernel of m. */
template <class K>
Mat<K> kernel_basis(Mat<K> m) {
  const Eigen::Index cols = m.cols();
  row_reduce(m);
  std::vector<Eigen::Index> pivot_of_col(cols, -1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (r < m.rows() && !(m(r, c) == K(0))) {
      pivot_of_col[c] = r;
      ++r;
    }
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);
  Mat<K> ker = Mat<K>::Zero(cols, (Eigen::Index)free_cols.size());
  for (Eigen::Index k = 0; k < (Eigen::Index)free_cols.size(); ++k) {
    Eigen::Index fc = free_cols[(size_t)k];
    ker(fc, k) = K(1);
    for (Eigen::Index c = 0; c < cols; ++c) {
      Eigen::Index p = pivot_of_col[c];
      if (p >= 0) ker(c, k) = K(0) - m(p, fc);
    }
  }
  return ker;
}

template <class K>
Mat<K> hcat(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
    throw ArithmeticError("hcat: row mismatch");
  Eigen::Index rows = a.cols() ? a.rows() : b.rows();
  Mat<K> m(rows, a.cols() + b.cols());
  if (a.cols()) m.leftCols(a.cols()) = a;
  if (b.cols()) m.rightCols(b.cols()) = b;
  return m;
}

/* Rank of the image of `extra` in the quotient by the column span of `base`:
   rank([base | extra]) - rank(base). */
template <class K>
int induced_rank(const Mat<K>& base, const Mat<K>& extra) {
  return rank_of<K>(hcat(base, extra)) - rank_of<K>(base);
}

/* One cohomological slot of a complex: d_prev lands in the slot, d_next
   leaves it.  dim H = dim ker(d_next) - rank(d_prev). */
template <class K>
int cohomology_dim(const Mat<K>& d_prev, const Mat<K>& d_next) {
  int kernel = (int)d_next.cols() - rank_of<K>(Mat<K>(d_next));
  return kernel - rank_of<K>(Mat<K>(d_prev));
}

/* Whether the chain map slice F (between the slots with boundaries
   d_prev -> slot -> d_next and likewise primed) induces an isomorphism on
   cohomology in this slot. */
template <class K>
bool induces_iso(const Mat<K>& d_prev, const Mat<K>& d_next,
                 const Mat<K>& dp_prev, const Mat<K>& dp_next, const Mat<K>& f) {
  int h = cohomology_dim<K>(d_prev, d_next);
  int hp = cohomology_dim<K>(dp_prev, dp_next);
  if (h != hp) return false;
  if (h == 0) return true;
  Mat<K> ker = kernel_basis<K>(Mat<K>(d_next));
  Mat<K> mapped = f * ker;
  return induced_rank<K>(dp_prev, mapped) == h;
}

}  // namespace ggk
