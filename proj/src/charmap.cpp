#include "jinv/charmap.hpp"

namespace jinv {

Subspace charmap_image(const RootSystem& rs, LatticeChoice choice, Int p) {
  const int n = rs.rank;
  const CocenterGroup cg = cocenter(rs);
  const auto designated = designated_weights(cg, choice);

  IMat rows(n + static_cast<Eigen::Index>(designated.size()), n);
  rows.topRows(n) = cartan_matrix(rs).transpose(); // row j = alpha_j in h-coords
  for (std::size_t i = 0; i < designated.size(); ++i) {
    rows.row(n + static_cast<Eigen::Index>(i)) =
        IVec::Unit(n, designated[i] - 1).transpose();
  }
  return span_fp(rows, p);
}

int degree_one_generator_count(const RootSystem& rs, LatticeChoice choice, Int p) {
  return rs.rank - charmap_image(rs, choice, p).dim();
}

} // namespace jinv
