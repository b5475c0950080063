#pragma once

#include "jinv/types.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace jinv {

/// Smith normal form decomposition U * A * V = D with U, V unimodular and
/// D diagonal with a divisibility chain d_1 | d_2 | ... (entries >= 0).
template <typename MatT>
struct SmithResult {
  MatT U;
  MatT D;
  MatT V;
};

/// Exact Smith normal form over the integers with deterministic pivoting:
/// at each step the pivot is the smallest-|value| nonzero entry of the
/// working submatrix, ties broken by row-major position.
template <typename MatT>
SmithResult<MatT> smith_normal_form(const MatT& a) {
  using Scalar = typename MatT::Scalar;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();

  SmithResult<MatT> r{MatT::Identity(m, m), a, MatT::Identity(n, n)};
  MatT& d = r.D;

  auto abs_val = [](Scalar x) { return x < 0 ? -x : x; };

  for (Eigen::Index t = 0; t < m && t < n;) {
    // Deterministic pivot: smallest nonzero |entry| in the submatrix.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i) {
      for (Eigen::Index j = t; j < n; ++j) {
        if (d(i, j) != 0 &&
            (pi < 0 || abs_val(d(i, j)) < abs_val(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break; // submatrix is zero

    if (pi != t) {
      d.row(pi).swap(d.row(t));
      r.U.row(pi).swap(r.U.row(t));
    }
    if (pj != t) {
      d.col(pj).swap(d.col(t));
      r.V.col(pj).swap(r.V.col(t));
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Reduce column t; if a remainder survives it becomes the smaller
      // pivot on the next sweep.
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Scalar q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          r.U.row(i) -= q * r.U.row(t);
        }
        if (d(i, t) != 0) {
          d.row(i).swap(d.row(t));
          r.U.row(i).swap(r.U.row(t));
          dirty = true;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Scalar q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          r.V.col(j) -= q * r.V.col(t);
        }
        if (d(t, j) != 0) {
          d.col(j).swap(d.col(t));
          r.V.col(j).swap(r.V.col(t));
          dirty = true;
        }
      }
    }

    // Divisibility: fold any non-multiple into row t and redo the step.
    bool divides_all = true;
    for (Eigen::Index i = t + 1; i < m && divides_all; ++i) {
      for (Eigen::Index j = t + 1; j < n && divides_all; ++j) {
        if (d(i, j) % d(t, t) != 0) {
          d.row(t) += d.row(i);
          r.U.row(t) += r.U.row(i);
          divides_all = false;
        }
      }
    }
    if (!divides_all) continue;

    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      r.U.row(t) = -r.U.row(t);
    }
    ++t;
  }

  return r;
}

/// Diagonal of an SNF result as a plain vector (length min(m, n)).
template <typename MatT>
std::vector<typename MatT::Scalar> smith_diagonal(const SmithResult<MatT>& r) {
  std::vector<typename MatT::Scalar> out;
  const Eigen::Index k = std::min(r.D.rows(), r.D.cols());
  out.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index t = 0; t < k; ++t) {
    out.push_back(r.D(t, t));
  }
  return out;
}

} // namespace jinv
