#pragma once

#include "jinv/chow.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jinv {

enum class IsotropyStatus { hyperbolic, isotropic_nonhyperbolic, anisotropic };

std::string to_string(IsotropyStatus s);

/// Input data of a quadratic form with trivial discriminant: its even
/// dimension, the 2-adic valuation ii_S of the index of its (full, hence
/// either) Clifford component, its isotropy status, and optionally its
/// splitting pattern (the sequence of higher Witt indices).
/// Invariants: ii_S <= dim/2 - 1, and hyperbolic forces ii_S = 0.
struct QFormProfile {
  int dim = 0;
  int ii_S = 0;
  IsotropyStatus status = IsotropyStatus::anisotropic;
  std::optional<std::vector<int>> splitting_pattern;
};

/// One classification result: the J-invariant, and where documented the
/// set-form Vishik invariant, a short description tag, and the splitting
/// pattern.
struct ClassificationRow {
  JTuple J;
  std::optional<std::vector<int>> vishik_J;
  std::string description;
  std::optional<std::vector<int>> splitting_pattern;
};

/// Exact classification for dimensions 4, 6, 8, and the two documented
/// dimension-10 splitting patterns ((0,2,3,5) anisotropic and (2,3,5)
/// isotropic, both with ii_S = 2 and J = (2,0)). Dimension 8 uses
/// j_1 = min{ii_S, 2} and j_2 = 1 exactly for anisotropic forms, and
/// returns the full documented table row. Inconsistent profiles (for
/// example dimension 6 anisotropic with ii_S = 1) are rejected with the
/// violated rule named.
ClassificationRow classify_qform(const QFormProfile& q);

/// A static view of the seven documented dimension-8 rows.
struct Dim8Row {
  JTuple J;
  std::vector<int> vishik;
  int ii_S;
  int ii; // valuation of the gcd of the degrees of the splitting fields
  std::vector<int> pattern;
  std::string description;
  IsotropyStatus status;
};

const std::vector<Dim8Row>& dim8_table();

/// The two directions of the dimension-8 lookup; the documented rows make
/// both single-valued (six patterns against six J values).
JTuple dim8_J_from_pattern(const std::vector<int>& pattern);
std::vector<int> dim8_pattern_from_J(const JTuple& J);

/// Which member of a degree-8 triple the caller's algebra is.
enum class Slot { A, B, C };

std::string to_string(Slot s);

/// Input data of an algebra with orthogonal involution and trivial
/// discriminant. For degree 8 the three valuations are the sorted triple
/// of the algebra and its two Clifford components (ii_A <= ii_plus <=
/// ii_minus as slots A <= B <= C), and `designated` records which slot the
/// caller's own algebra occupies; for degrees 4 and 6 the fields keep
/// their literal roles (algebra, C_+, C_-).
struct InvolutionProfile {
  int degree = 0;
  int ii_A = 0;
  int ii_plus = 0;
  int ii_minus = 0;
  IsotropyStatus status = IsotropyStatus::anisotropic;
  Slot designated = Slot::A;
};

/// Degrees 4 and 6.
/// Degree 4: J = (j_1, j_2) with j_1 = 1 exactly when the algebra is
/// non-split and j_2 = 0 exactly when the involution is hyperbolic;
/// hyperbolicity holds if and only if one Clifford component is split, and
/// the status input must agree. Degree 6: J = (ii_S) with
/// ii_S = ii_plus = ii_minus <= 2; a non-split algebra forces anisotropy,
/// and a split one forces the same status/ii_S correspondence as
/// dimension-6 forms.
ClassificationRow classify_involution(const InvolutionProfile& p);

struct TripleRow {
  Slot slot;
  JTuple J;
};

struct TripleResult {
  std::vector<TripleRow> rows; // slots A, B, C in order
  Slot designated;
};

/// Degree 8: with sorted valuations v1 <= v2 <= v3, the three J-invariants
/// are (j, j', j3) for slot A and (j', j, j3) for slots B and C, where
/// j = min{v1, 2}, j' = min{v2, 2}, and j3 is 1 exactly for anisotropic
/// involutions (the three members are isotropic together). Inconsistent
/// inputs are rejected: unsorted valuations, triangle violations,
/// non-anisotropic status with v3 = 3 or with v3 >= 2 and v1 > 0,
/// hyperbolic status whose designated member has no split Clifford
/// component, and isotropic non-hyperbolic status with a split designated
/// member and split component.
TripleResult classify_triple(const InvolutionProfile& p);

/// The three values that are admissible for degree 8 but never occur:
/// (1,2,0), (2,1,0), (2,2,0).
const std::vector<JTuple>& excluded_values();

/// True iff J is admissible for the degree-8 signature and not excluded.
bool occurs(const JTuple& J);

/// True iff the entries at positions 2..2^(s-2) (1-based) all vanish: the
/// documented shape of the J-invariant when the underlying algebra becomes
/// generically a 2^s-dimensional Pfister-form algebra. PGO signatures
/// only; requires s > 2 and 2^(s-2) <= r.
bool is_pattern_Is(const JTuple& J, const KacSignature& sig, int s);

/// True iff deleting zeros from both tuples leaves equal sequences: the
/// invariance of the nontrivial indices under Witt-equivalent changes of
/// rank.
bool witt_consistency(const JTuple& a, const JTuple& b);

} // namespace jinv
