#include "jinv/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace jinv {

namespace {

std::vector<Int> flatten(const IMat& m) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out.push_back(m(i, j));
    }
  }
  return out;
}

struct VecHash {
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Exact inverse of a unimodular integer matrix: invert over double,
/// round, and verify the exact product.
IMat unimodular_inverse(const IMat& m) {
  Eigen::MatrixXd inv = m.cast<double>().inverse();
  IMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = static_cast<Int>(std::llround(inv(i, j)));
    }
  }
  if (m * out != IMat::Identity(m.rows(), m.cols())) {
    throw std::domain_error("matrix is not invertible over the integers");
  }
  return out;
}

} // namespace

bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.root_action.rows() == b.root_action.rows() &&
         a.root_action == b.root_action;
}

bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

WeylElement weyl_identity(const RootSystem& rs) {
  const int n = rs.rank;
  return WeylElement{IMat::Identity(n, n), IMat::Identity(n, n), {}};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank;
  if (i < 1 || i > n) {
    throw std::invalid_argument("generator index out of range");
  }
  const IMat c = cartan_matrix(rs);
  // Root basis: s_i(alpha_j) = alpha_j - c_{ij} alpha_i.
  IMat root = IMat::Identity(n, n);
  root.row(i - 1) -= c.row(i - 1);
  // Weight basis: s_i(omega_j) = omega_j - delta_{ij} alpha_i.
  IMat weight = IMat::Identity(n, n);
  weight.col(i - 1) -= c.col(i - 1);
  return WeylElement{std::move(root), std::move(weight), {i}};
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.root_action.rows() != b.root_action.rows()) {
    throw std::invalid_argument("rank mismatch in Weyl composition");
  }
  WeylElement out{a.root_action * b.root_action,
                  a.weight_action * b.weight_action, a.word};
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out{unimodular_inverse(w.root_action),
                  unimodular_inverse(w.weight_action), w.word};
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

RootVec act(const WeylElement& w, const RootVec& v) {
  if (w.root_action.cols() != v.coords.size()) {
    throw std::invalid_argument("dimension mismatch in Weyl action");
  }
  return RootVec(w.root_action * v.coords);
}

WeightVec act(const WeylElement& w, const WeightVec& v) {
  if (w.weight_action.cols() != v.coords.size()) {
    throw std::invalid_argument("dimension mismatch in Weyl action");
  }
  return WeightVec(w.weight_action * v.coords);
}

std::optional<std::uint64_t> weyl_order(const RootSystem& rs) {
  const std::uint64_t n = static_cast<std::uint64_t>(rs.rank);
  std::uint64_t order = 1;
  auto mul = [&order](std::uint64_t f) {
    return !__builtin_mul_overflow(order, f, &order);
  };
  // Factorial part.
  const std::uint64_t fact_top = (rs.family == Family::A) ? n + 1 : n;
  for (std::uint64_t f = 2; f <= fact_top; ++f) {
    if (!mul(f)) return std::nullopt;
  }
  // Sign part: 2^n for B_n, 2^(n-1) for D_n.
  const std::uint64_t twos =
      (rs.family == Family::B) ? n : (rs.family == Family::D) ? n - 1 : 0;
  for (std::uint64_t t = 0; t < twos; ++t) {
    if (!mul(2)) return std::nullopt;
  }
  return order;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t cap) {
  const auto order = weyl_order(rs);
  if (!order) {
    throw std::domain_error("Weyl group order exceeds 64-bit range, above any cap");
  }
  if (*order > cap) {
    throw std::domain_error("Weyl group order " + std::to_string(*order) +
                            " exceeds cap " + std::to_string(cap));
  }

  const int n = rs.rank;
  std::vector<WeylElement> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    gens.push_back(simple_reflection(rs, i));
  }

  std::vector<WeylElement> all;
  all.reserve(*order);
  all.push_back(weyl_identity(rs));

  std::unordered_set<std::vector<Int>, VecHash> seen;
  seen.insert(flatten(all[0].root_action));

  std::size_t level_begin = 0;
  while (level_begin < all.size()) {
    const std::size_t level_end = all.size();
    std::vector<WeylElement> next;
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      for (int j = 0; j < n; ++j) {
        IMat root = all[idx].root_action * gens[j].root_action;
        auto key = flatten(root);
        if (seen.insert(std::move(key)).second) {
          WeylElement e{std::move(root),
                        all[idx].weight_action * gens[j].weight_action,
                        all[idx].word};
          e.word.push_back(j + 1);
          next.push_back(std::move(e));
        }
      }
    }
    std::sort(next.begin(), next.end(),
              [](const WeylElement& a, const WeylElement& b) {
                return flatten(a.root_action) < flatten(b.root_action);
              });
    for (auto& e : next) {
      all.push_back(std::move(e));
    }
    level_begin = level_end;
  }

  if (all.size() != *order) {
    throw std::logic_error("Weyl enumeration size disagrees with the order formula");
  }
  return all;
}

} // namespace jinv
