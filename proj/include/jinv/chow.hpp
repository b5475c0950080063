#pragma once

#include "jinv/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jinv {

/// Group labels of the mod-2 Chow ring table. The integer parameter is the
/// subscript convention of each label: SO_n and Spin_n take n itself;
/// SpinHalf_2n and PGO_2n take n (so the algebra degree is 2n).
enum class GroupLabel { SO, Spin, SpinHalf, PGO };

std::string to_string(GroupLabel label);

/// Presentation data (p; d_1..d_r; k_1..k_r) of the mod-p Chow ring of the
/// split group: r truncated polynomial generators, of degrees d_i, with
/// truncation exponents p^(k_i).
struct KacSignature {
  Int p = 2;
  GroupLabel label = GroupLabel::SO;
  int n_param = 0;
  int r = 0;
  std::vector<int> d;
  std::vector<int> k;
};

/// The table rows at p = 2 (the only tabulated prime):
///   SO_n:         r = floor((n+1)/4), d_i = 2i-1, k_i = floor(log2((n-1)/d_i))
///   Spin_n:       r = floor((n-3)/4), d_i = 2i+1, k_i = floor(log2((n-1)/d_i))
///   SpinHalf_2n:  2|n; r = n/2, d_1 = 1, k_1 = v_2(n),
///                 d_i = 2i-1 and k_i = floor(log2((2n-1)/d_i)) for i >= 2
///   PGO_2n:       r = floor((n+2)/2), d_1 = 1, k_1 = v_2(n),
///                 d_i = 2i-3 and k_i = floor(log2((2n-1)/d_i)) for i >= 2
KacSignature kac_signature(GroupLabel label, int n, Int p = 2);

/// True iff the binomial coefficient C(a, b) is odd (b > a gives 0, even).
bool binom_odd(std::uint64_t a, std::uint64_t b);

/// True iff C(a, b) is nonzero mod p (Lucas' criterion, digitwise).
bool binom_nonzero_mod_p(std::uint64_t a, std::uint64_t b, Int p);

/// A candidate value (j_1..j_r) of the J-invariant for some signature.
using JTuple = std::vector<int>;

/// Bounds check 0 <= j_i <= k_i plus every instance of the restriction:
/// whenever d_i + l = p^s d_m with 0 <= l <= d_i and p does not divide
/// C(d_i, l), the tuple must satisfy j_m <= j_i + s. For PGO signatures
/// the restriction instances are only applied when both i >= 2 and m >= 2.
bool is_admissible(const KacSignature& sig, const JTuple& J);

/// All admissible tuples, odometer-ordered with j_1 varying fastest.
/// Guarded to r <= 8.
std::vector<JTuple> admissible_tuples(const KacSignature& sig);

/// Coefficients (degree-ascending) of the Poincare polynomial
///   prod_i (1 - t^(d_i p^(j_i))) / (1 - t^(d_i)),
/// each factor being 1 + t^(d_i) + ... + t^(d_i (p^(j_i) - 1)).
std::vector<Int> poincare_polynomial(const KacSignature& sig, const JTuple& J);

} // namespace jinv
