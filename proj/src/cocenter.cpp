#include "jinv/cocenter.hpp"

#include "jinv/smith.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jinv {

CocenterGroup cocenter(const RootSystem& rs) {
  const int n = rs.rank;
  const IMat c = cartan_matrix(rs);
  const auto snf = smith_normal_form(c);

  CocenterGroup cg{rs, {}, {}, IMat()};
  std::vector<Eigen::Index> kept;
  for (Eigen::Index t = 0; t < n; ++t) {
    const Int d = snf.D(t, t);
    if (d == 0) {
      throw std::logic_error("Cartan matrix is singular");
    }
    if (d > 1) {
      cg.factors.push_back(d);
      kept.push_back(t);
    }
  }

  // The quotient Z^n / (column span of C) maps y to (U y) mod factors,
  // restricted to the rows with nontrivial factor.
  cg.projection = IMat(static_cast<Eigen::Index>(kept.size()), n);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    cg.projection.row(static_cast<Eigen::Index>(i)) = snf.U.row(kept[i]);
  }

  cg.omega_bar.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    cg.omega_bar.push_back(weight_class(cg, fundamental_weight(rs, i)));
  }
  return cg;
}

Int cocenter_order(const CocenterGroup& cg) {
  Int order = 1;
  for (Int f : cg.factors) order *= f;
  return order;
}

ClassVec class_zero(const CocenterGroup& cg) {
  return ClassVec(cg.factors.size(), 0);
}

namespace {

void check_class(const CocenterGroup& cg, const ClassVec& a) {
  if (a.size() != cg.factors.size()) {
    throw std::invalid_argument("class coordinate count mismatch");
  }
}

Int pos_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

} // namespace

ClassVec class_add(const CocenterGroup& cg, const ClassVec& a, const ClassVec& b) {
  check_class(cg, a);
  check_class(cg, b);
  ClassVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = pos_mod(a[i] + b[i], cg.factors[i]);
  }
  return out;
}

ClassVec class_neg(const CocenterGroup& cg, const ClassVec& a) {
  check_class(cg, a);
  ClassVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = pos_mod(-a[i], cg.factors[i]);
  }
  return out;
}

ClassVec class_scale(const CocenterGroup& cg, Int k, const ClassVec& a) {
  check_class(cg, a);
  ClassVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = pos_mod(k * a[i], cg.factors[i]);
  }
  return out;
}

bool class_is_zero(const ClassVec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

Int class_order(const CocenterGroup& cg, const ClassVec& a) {
  check_class(cg, a);
  Int order = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int f = cg.factors[i];
    const Int component_order = f / std::gcd(f, pos_mod(a[i], f));
    order = std::lcm(order, component_order);
  }
  return order;
}

std::vector<ClassVec> all_classes(const CocenterGroup& cg) {
  std::vector<ClassVec> out;
  out.reserve(static_cast<std::size_t>(cocenter_order(cg)));
  ClassVec cur(cg.factors.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] < cg.factors[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

ClassVec weight_class(const CocenterGroup& cg, const WeightVec& v) {
  if (v.coords.size() != cg.rs.rank) {
    throw std::invalid_argument("weight dimension mismatch");
  }
  const IVec raw = cg.projection * v.coords;
  ClassVec out(cg.factors.size());
  for (std::size_t i = 0; i < cg.factors.size(); ++i) {
    out[i] = pos_mod(raw(static_cast<Eigen::Index>(i)), cg.factors[i]);
  }
  return out;
}

std::string to_string(LatticeChoice choice) {
  switch (choice) {
    case LatticeChoice::adjoint: return "adjoint";
    case LatticeChoice::simply_connected: return "simply_connected";
    case LatticeChoice::special_orthogonal: return "special_orthogonal";
    case LatticeChoice::half_spin_plus: return "half_spin_plus";
    case LatticeChoice::half_spin_minus: return "half_spin_minus";
  }
  throw std::invalid_argument("unknown lattice choice");
}

std::vector<int> designated_weights(const CocenterGroup& cg, LatticeChoice choice) {
  const int n = cg.rs.rank;
  switch (choice) {
    case LatticeChoice::adjoint:
      return {};
    case LatticeChoice::simply_connected: {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
    case LatticeChoice::special_orthogonal:
      return {1};
    case LatticeChoice::half_spin_plus:
    case LatticeChoice::half_spin_minus: {
      const int i = (choice == LatticeChoice::half_spin_plus) ? n - 1 : n;
      if (cg.rs.family != Family::D) {
        throw std::domain_error("half_spin lattice requires family D, got " +
                                to_string(cg.rs.family) + "_" + std::to_string(n));
      }
      if (class_order(cg, cg.omega_bar[static_cast<std::size_t>(i - 1)]) != 2) {
        throw std::domain_error(
            "half_spin lattice requires the class of omega_" + std::to_string(i) +
            " to have order 2; D_" + std::to_string(n) +
            " with odd rank has order-4 classes");
      }
      return {i};
    }
  }
  throw std::invalid_argument("unknown lattice choice");
}

std::vector<ClassVec> subgroup_closure(const CocenterGroup& cg,
                                       const std::vector<ClassVec>& generators) {
  std::set<ClassVec> elements;
  elements.insert(class_zero(cg));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ClassVec> snapshot(elements.begin(), elements.end());
    for (const auto& e : snapshot) {
      for (const auto& g : generators) {
        auto s = class_add(cg, e, g);
        if (elements.insert(std::move(s)).second) grew = true;
      }
    }
  }
  return {elements.begin(), elements.end()};
}

std::vector<ClassVec> lattice_subgroup(const CocenterGroup& cg, LatticeChoice choice) {
  std::vector<ClassVec> gens;
  for (int i : designated_weights(cg, choice)) {
    gens.push_back(cg.omega_bar[static_cast<std::size_t>(i - 1)]);
  }
  return subgroup_closure(cg, gens);
}

} // namespace jinv
