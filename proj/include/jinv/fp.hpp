#pragma once

#include "jinv/types.hpp"

#include <stdexcept>
#include <string>

namespace jinv {

/// A linear subspace of F_p^n stored as a reduced row-echelon basis:
/// rows are nonzero, pivots are 1, each pivot is the only nonzero entry of
/// its column, and rows are ordered by pivot column. Entries lie in [0, p).
struct Subspace {
  int ambient = 0;
  Int p = 2;
  IMat basis; // dim x ambient, possibly 0 x ambient

  int dim() const { return static_cast<int>(basis.rows()); }
};

bool operator==(const Subspace& a, const Subspace& b);
bool operator!=(const Subspace& a, const Subspace& b);

inline Int mod_p(Int x, Int p) {
  Int r = x % p;
  return r < 0 ? r + p : r;
}

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Inverse of x modulo a prime p (x not divisible by p).
Int inverse_mod_p(Int x, Int p);

/// Row span of the given generators over F_p, in reduced row-echelon form.
/// Accepts any integer row matrix; entries are reduced mod p first.
Subspace span_fp(const IMat& generator_rows, Int p);

/// Membership test for a coordinate vector.
bool contains(const Subspace& s, const IVec& v);

/// True iff every basis vector of `a` lies in `b`.
bool subspace_leq(const Subspace& a, const Subspace& b);

} // namespace jinv
