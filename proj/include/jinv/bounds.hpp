#pragma once

#include "jinv/chow.hpp"
#include "jinv/cocenter.hpp"
#include "jinv/rootsystem.hpp"
#include "jinv/steinberg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace jinv {

/// Valuation-level model of the Tits algebras of a type-D group: the three
/// nontrivial cocenter classes carry the 2-adic index valuations of the
/// algebra A (class of omega_1) and the two Clifford components C_+ / C_-
/// (classes of omega_{n-1} / omega_n); the trivial class has valuation 0.
/// For odd rank the cocenter is cyclic of order 4: the two generators carry
/// ii_plus / ii_minus (which must agree) and the order-2 element carries
/// ii_A.
///
/// Validation (on by default):
///   - even rank: ii_A <= ii_plus + ii_minus and the two rotations
///     (a tensor product's index divides the product of the indices);
///   - odd rank: ii_plus == ii_minus, and ii_plus <= 1 forces ii_A = 0
///     (a Clifford component of index <= 2 has exponent <= 2, and the
///     algebra class is twice a component class).
/// Degree caps (2^ii_A <= 2n, 2^ii_plus/minus <= 2^(n-1)) are recorded as
/// warnings, never errors.
struct IndexProfile {
  RootSystem rs;
  int ii_A = 0;
  int ii_plus = 0;
  int ii_minus = 0;
  std::vector<std::string> warnings;
};

IndexProfile make_index_profile(const RootSystem& rs, int ii_A, int ii_plus,
                                int ii_minus, bool validate = true);

/// The valuation attached to a cocenter class by the profile.
int class_valuation(const IndexProfile& profile, const CocenterGroup& cg,
                    const ClassVec& cls);

/// The common index ii_J: minimum valuation over all combinations
/// sum_l a_l * (class of omega_{i_l}) where {omega_{i_l}} are the degree-1
/// generator weights (omega_1 and omega_n for even rank; omega_n for odd
/// rank) and at least one a_l is odd. Closed forms: even rank gives
/// min{ii_A, ii_plus, ii_minus}; odd rank gives ii_plus.
int common_index(const IndexProfile& profile);

/// Valuation ii_w of the index of the Tits algebra attached to rho_w,
/// which equals the valuation of the class of rho_w.
int rho_index_valuation(const IndexProfile& profile, const SteinbergEntry& entry);

/// For each table entry, the power 2^(ii_w) certifying that that power of
/// the first Chern class of the associated line bundle is rational.
struct RationalCycle {
  std::size_t index;
  Int exponent;
};

std::vector<RationalCycle> rational_cycle_exponents(
    const IndexProfile& profile, const std::vector<SteinbergEntry>& table);

/// A closed interval [lo, hi] for one degree-1 parameter, with the
/// signature cap k it lives under (lo <= hi <= cap).
struct BoundInterval {
  int lo = 0;
  int hi = 0;
  int cap = 0;
};

struct BoundsResult {
  std::vector<BoundInterval> intervals; // one per degree-1 parameter
  KacSignature sig;
};

/// Interval bounds on the degree-1 parameters of the J-invariant:
///
/// PGO signature, even rank (two parameters):
///   hi_1 = min{ii_A, k_1}, hi_2 = min{ii_plus, ii_minus, k_2};
///   ii_J > 0 forces lo_1, lo_2 >= 1; ii_J > 1 forces lo_l = 2 for each l
///   with k_l > 1. When one Clifford component is split, the half-spin
///   refinement applies to the first parameter: ii_A > 0 forces lo_1 >= 1
///   and ii_A > 1 with k_1 > 1 forces lo_1 = 2.
///
/// PGO signature, odd rank (one parameter, the reduced tuple: the k_1 = 0
/// slot of the signature is dropped and the cap is k_2):
///   hi = min{ii_plus, k_2}; ii_J = ii_plus gives the same lower bounds.
///
/// SO signature (split algebra required, one parameter):
///   hi = min{ii_S, k_1} with ii_S = ii_plus = ii_minus; lower bounds from
///   ii_J = ii_S as above.
///
/// SpinHalf signature (one Clifford component split required, one
/// parameter): hi = min{ii_A, k_1}; lower bounds from ii_A.
///
/// `isotropy_unknown` is accepted for symmetry with classification inputs
/// but no consumed bound depends on it.
BoundsResult degree_one_bounds(const IndexProfile& profile,
                               const KacSignature& sig,
                               bool isotropy_unknown = true);

} // namespace jinv
