#include "jinv/steinberg.hpp"

namespace jinv {

SteinbergEntry steinberg_entry(const RootSystem& rs, const CocenterGroup& cg,
                               const WeylElement& w) {
  const int n = rs.rank;
  const WeylElement winv = inverse(w);

  SteinbergEntry e{w, zero_weight(rs), {}, class_zero(cg)};
  for (int k = 1; k <= n; ++k) {
    if (is_negative_root(rs, act(winv, simple_root(rs, k)))) {
      e.descent_set.push_back(k);
      e.rho = e.rho + act(winv, fundamental_weight(rs, k));
      e.cls = class_add(cg, e.cls, cg.omega_bar[static_cast<std::size_t>(k - 1)]);
    }
  }
  return e;
}

std::vector<SteinbergEntry> steinberg_table(const RootSystem& rs, std::size_t cap) {
  const CocenterGroup cg = cocenter(rs);
  const auto elements = enumerate_weyl(rs, cap);
  std::vector<SteinbergEntry> table;
  table.reserve(elements.size());
  for (const auto& w : elements) {
    table.push_back(steinberg_entry(rs, cg, w));
  }
  return table;
}

std::vector<SteinbergEntry> special_elements(const RootSystem& rs) {
  const CocenterGroup cg = cocenter(rs);
  std::vector<SteinbergEntry> out;
  out.reserve(static_cast<std::size_t>(rs.rank));
  for (int i = 1; i <= rs.rank; ++i) {
    out.push_back(steinberg_entry(rs, cg, simple_reflection(rs, i)));
  }
  return out;
}

} // namespace jinv
