#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace jinv {

/// Exact integer scalar used by every lattice computation in the library.
using Int = std::int64_t;

/// Dense integer matrix / column vector (Eigen, dynamic size).
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

} // namespace jinv
