#pragma once

#include "jinv/rootsystem.hpp"
#include "jinv/types.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jinv {

/// An element of the Weyl group, stored as its exact matrix action on both
/// bases. The action on the simple-root basis is the canonical form used
/// for equality and deduplication; the action on the fundamental-weight
/// basis is carried alongside so both kinds of vectors act exactly.
/// `word` is a word in the simple reflections (1-based indices); elements
/// produced by enumerate_weyl carry a reduced word.
struct WeylElement {
  IMat root_action;
  IMat weight_action;
  std::vector<int> word;
};

/// Equality compares the root-basis action only (the weight action and any
/// particular word are determined by the element).
bool operator==(const WeylElement& a, const WeylElement& b);
bool operator!=(const WeylElement& a, const WeylElement& b);

WeylElement weyl_identity(const RootSystem& rs);

/// The simple reflection s_i (1-based).
WeylElement simple_reflection(const RootSystem& rs, int i);

/// Group product: compose(a, b) acts as v -> a(b(v)). The stored word is
/// the concatenation and need not be reduced.
WeylElement compose(const WeylElement& a, const WeylElement& b);

/// Exact inverse. Uses the reversed word when one is present; otherwise
/// inverts the integer matrices directly (determinant is +-1) and verifies
/// the product is the identity.
WeylElement inverse(const WeylElement& w);

RootVec act(const WeylElement& w, const RootVec& v);
WeightVec act(const WeylElement& w, const WeightVec& v);

/// |W| from the closed-form order formulas: (n+1)! for A_n, 2^n n! for B_n,
/// 2^(n-1) n! for D_n. Returns nullopt when the value overflows 64 bits.
std::optional<std::uint64_t> weyl_order(const RootSystem& rs);

inline constexpr std::size_t default_weyl_cap = 6'000'000;

/// All Weyl group elements, each exactly once, in a deterministic order:
/// breadth-first by reduced word length starting from the identity, each
/// level sorted lexicographically by the row-major entries of the
/// root-basis matrix. Throws when |W| exceeds `cap`, reporting |W|.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs,
                                        std::size_t cap = default_weyl_cap);

} // namespace jinv
