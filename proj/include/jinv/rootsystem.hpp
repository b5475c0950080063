#pragma once

#include "jinv/types.hpp"

#include <string>

namespace jinv {

/// Classical families supported by the library. Everything is indexed in
/// Bourbaki numbering: A_n is the chain 1-2-...-n; B_n has the short root
/// alpha_n at the end of the chain; D_n forks at node n-2 into n-1 and n.
enum class Family { A, B, D };

std::string to_string(Family f);

/// A split simple root system of classical type.
/// Supported ranks: A_n with n >= 1, B_n with n >= 2, D_n with n >= 3.
/// The constructor rejects anything else.
struct RootSystem {
  Family family;
  int rank;

  RootSystem(Family f, int n);
};

bool operator==(const RootSystem& a, const RootSystem& b);
bool operator!=(const RootSystem& a, const RootSystem& b);

/// Integer vector in the fundamental-weight basis {omega_1..omega_n}.
struct WeightVec {
  IVec coords;

  explicit WeightVec(IVec c) : coords(std::move(c)) {}
};

/// Integer vector in the simple-root basis {alpha_1..alpha_n}.
struct RootVec {
  IVec coords;

  explicit RootVec(IVec c) : coords(std::move(c)) {}
};

WeightVec operator+(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a);
WeightVec operator*(Int k, const WeightVec& a);
bool operator==(const WeightVec& a, const WeightVec& b);
bool operator!=(const WeightVec& a, const WeightVec& b);

RootVec operator+(const RootVec& a, const RootVec& b);
RootVec operator-(const RootVec& a, const RootVec& b);
RootVec operator-(const RootVec& a);
RootVec operator*(Int k, const RootVec& a);
bool operator==(const RootVec& a, const RootVec& b);
bool operator!=(const RootVec& a, const RootVec& b);

/// Cartan matrix with entries c_{ij} = <alpha_i^vee, alpha_j>.
/// Column j is the simple root alpha_j written in the fundamental-weight
/// basis, since <alpha_i^vee, omega_j> = delta_{ij}.
IMat cartan_matrix(const RootSystem& rs);

/// The zero weight.
WeightVec zero_weight(const RootSystem& rs);

/// omega_i as a WeightVec (the i-th unit vector), 1-based.
WeightVec fundamental_weight(const RootSystem& rs, int i);

/// alpha_i in omega-coordinates: the i-th column of the Cartan matrix.
WeightVec simple_root_as_weight(const RootSystem& rs, int i);

/// alpha_i as a RootVec (the i-th unit vector), 1-based.
RootVec simple_root(const RootSystem& rs, int i);

/// Simple reflection on a weight: s_i(v) = v - v_i * alpha_i.
/// Involutive, and fixes v whenever v_i = 0.
WeightVec reflect(const RootSystem& rs, int i, const WeightVec& v);

/// True iff every coordinate is <= 0. Meaningful for root vectors only:
/// the Weyl orbit of a simple root always has all coordinates >= 0 or
/// all <= 0.
bool is_negative_root(const RootSystem& rs, const RootVec& v);

} // namespace jinv
