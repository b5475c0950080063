#include "jinv/fp.hpp"

#include <vector>

namespace jinv {

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient == b.ambient && a.p == b.p &&
         a.basis.rows() == b.basis.rows() && a.basis == b.basis;
}

bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

Int inverse_mod_p(Int x, Int p) {
  // Extended Euclid on (x mod p, p).
  Int a = mod_p(x, p), b = p;
  if (a == 0) throw std::domain_error("no inverse of 0 mod p");
  Int s0 = 1, s1 = 0;
  while (b != 0) {
    const Int q = a / b;
    a -= q * b;
    std::swap(a, b);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return mod_p(s0, p);
}

Subspace span_fp(const IMat& generator_rows, Int p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  const Eigen::Index n = generator_rows.cols();
  IMat work = generator_rows;
  for (Eigen::Index i = 0; i < work.rows(); ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      work(i, j) = mod_p(work(i, j), p);
    }
  }

  Eigen::Index row = 0;
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index col = 0; col < n && row < work.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < work.rows(); ++i) {
      if (work(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    work.row(piv).swap(work.row(row));
    const Int inv = inverse_mod_p(work(row, col), p);
    for (Eigen::Index j = 0; j < n; ++j) {
      work(row, j) = mod_p(work(row, j) * inv, p);
    }
    for (Eigen::Index i = 0; i < work.rows(); ++i) {
      if (i == row || work(i, col) == 0) continue;
      const Int f = work(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        work(i, j) = mod_p(work(i, j) - f * work(row, j), p);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }

  Subspace s;
  s.ambient = static_cast<int>(n);
  s.p = p;
  s.basis = work.topRows(row);
  return s;
}

bool contains(const Subspace& s, const IVec& v) {
  if (v.size() != s.ambient) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  IVec r(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    r(j) = mod_p(v(j), s.p);
  }
  for (Eigen::Index i = 0; i < s.basis.rows(); ++i) {
    // Locate this basis row's pivot and eliminate it from r.
    Eigen::Index piv = -1;
    for (Eigen::Index j = 0; j < s.basis.cols(); ++j) {
      if (s.basis(i, j) != 0) {
        piv = j;
        break;
      }
    }
    if (piv < 0 || r(piv) == 0) continue;
    const Int f = r(piv);
    for (Eigen::Index j = 0; j < r.size(); ++j) {
      r(j) = mod_p(r(j) - f * s.basis(i, j), s.p);
    }
  }
  return (r.array() == 0).all();
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient || a.p != b.p) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
  for (Eigen::Index i = 0; i < a.basis.rows(); ++i) {
    IVec v = a.basis.row(i).transpose();
    if (!contains(b, v)) return false;
  }
  return true;
}

} // namespace jinv
