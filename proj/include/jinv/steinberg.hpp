#pragma once

#include "jinv/cocenter.hpp"
#include "jinv/rootsystem.hpp"
#include "jinv/weyl.hpp"

#include <cstddef>
#include <vector>

namespace jinv {

/// One row of the Steinberg table: the weight rho_w attached to a Weyl
/// element, the descent data it is built from, and its cocenter class.
///   descent_set = { k : w^{-1}(alpha_k) is a negative root }
///   rho         = sum over the descent set of w^{-1}(omega_k)
///   cls         = sum over the descent set of the classes of omega_k
///               = the class of rho (the two agree because weight classes
///                 are Weyl-invariant).
struct SteinbergEntry {
  WeylElement w;
  WeightVec rho;
  std::vector<int> descent_set; // ascending, 1-based
  ClassVec cls;
};

/// The entry of a single Weyl element.
SteinbergEntry steinberg_entry(const RootSystem& rs, const CocenterGroup& cg,
                               const WeylElement& w);

/// One entry per Weyl element, in enumeration order. The weights rho_w are
/// pairwise distinct (they index a basis of K_0 of the Borel variety).
std::vector<SteinbergEntry> steinberg_table(const RootSystem& rs,
                                            std::size_t cap = default_weyl_cap);

/// The n entries of the simple reflections s_1..s_n, in index order; the
/// i-th has rho = omega_i - alpha_i and class omega_bar_i.
std::vector<SteinbergEntry> special_elements(const RootSystem& rs);

} // namespace jinv
