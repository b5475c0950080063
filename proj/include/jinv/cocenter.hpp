#pragma once

#include "jinv/rootsystem.hpp"
#include "jinv/types.hpp"

#include <string>
#include <vector>

namespace jinv {

/// An element of the cocenter, written in coordinates modulo the invariant
/// factors of the group (component i lies in [0, factors[i])).
using ClassVec = std::vector<Int>;

/// The finite abelian group Lambda_omega / Lambda_r presented by the
/// invariant factors (> 1) of the Smith normal form of the Cartan matrix,
/// together with the classes of the fundamental weights.
struct CocenterGroup {
  RootSystem rs;
  std::vector<Int> factors;        // invariant factors > 1, divisibility chain
  std::vector<ClassVec> omega_bar; // classes of omega_1..omega_n
  IMat projection;                 // factor-count x n rows mapping omega-coords
                                   // to pre-reduction class coordinates
};

CocenterGroup cocenter(const RootSystem& rs);

/// |Lambda_omega / Lambda_r| = product of the invariant factors
/// = |det(Cartan matrix)|.
Int cocenter_order(const CocenterGroup& cg);

ClassVec class_zero(const CocenterGroup& cg);
ClassVec class_add(const CocenterGroup& cg, const ClassVec& a, const ClassVec& b);
ClassVec class_neg(const CocenterGroup& cg, const ClassVec& a);
ClassVec class_scale(const CocenterGroup& cg, Int k, const ClassVec& a);
bool class_is_zero(const ClassVec& a);
Int class_order(const CocenterGroup& cg, const ClassVec& a);

/// All elements, in odometer order (last coordinate varies fastest).
std::vector<ClassVec> all_classes(const CocenterGroup& cg);

/// The class of a weight. A homomorphism from the weight lattice whose
/// kernel contains the root lattice, hence constant on Weyl orbits.
ClassVec weight_class(const CocenterGroup& cg, const WeightVec& v);

/// The intermediate character lattices consumed downstream, identified
/// with subgroups H = That/Lambda_r of the cocenter:
///   adjoint             -> trivial subgroup
///   simply_connected    -> the full cocenter
///   special_orthogonal  -> generated by the class of omega_1
///   half_spin_plus      -> generated by the class of omega_{n-1}
///   half_spin_minus     -> generated by the class of omega_n
/// The half-spin choices require family D and the class to have order 2
/// (even rank); anything else is rejected.
enum class LatticeChoice {
  adjoint,
  simply_connected,
  special_orthogonal,
  half_spin_plus,
  half_spin_minus,
};

std::string to_string(LatticeChoice choice);

/// The fundamental-weight indices adjoined to the root lattice by the
/// choice (empty for adjoint, 1..n for simply connected, ...). Validates
/// the choice against the group.
std::vector<int> designated_weights(const CocenterGroup& cg, LatticeChoice choice);

/// All elements of the subgroup H = That/Lambda_r, sorted lexicographically.
std::vector<ClassVec> lattice_subgroup(const CocenterGroup& cg, LatticeChoice choice);

/// Smallest subgroup containing the given classes, sorted lexicographically.
std::vector<ClassVec> subgroup_closure(const CocenterGroup& cg,
                                       const std::vector<ClassVec>& generators);

} // namespace jinv
