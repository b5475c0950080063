#include "jinv/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace jinv {

IndexProfile make_index_profile(const RootSystem& rs, int ii_A, int ii_plus,
                                int ii_minus, bool validate) {
  if (rs.family != Family::D) {
    throw std::invalid_argument("index profiles are defined for family D only");
  }
  if (ii_A < 0 || ii_plus < 0 || ii_minus < 0) {
    throw std::invalid_argument("index valuations must be non-negative");
  }

  IndexProfile p{rs, ii_A, ii_plus, ii_minus, {}};
  const int n = rs.rank;

  if (validate) {
    if (n % 2 == 0) {
      if (ii_A > ii_plus + ii_minus || ii_plus > ii_A + ii_minus ||
          ii_minus > ii_A + ii_plus) {
        throw std::domain_error(
            "inconsistent profile: the three index valuations must satisfy "
            "the triangle inequalities (a tensor product's index divides the "
            "product of the indices)");
      }
    } else {
      if (ii_plus != ii_minus) {
        throw std::domain_error(
            "inconsistent profile: for odd rank the two Clifford components "
            "have the same index (ii_plus must equal ii_minus)");
      }
      if (ii_plus <= 1 && ii_A != 0) {
        throw std::domain_error(
            "inconsistent profile: for odd rank a Clifford component of "
            "index <= 2 has exponent <= 2, forcing the algebra to be split "
            "(ii_A = 0)");
      }
    }
  }

  // Degree caps are advisory: 2^ii_A <= 2n and 2^ii_pm <= 2^(n-1).
  auto pow2_exceeds = [](int e, Int bound) {
    Int v = 1;
    for (int t = 0; t < e; ++t) {
      v *= 2;
      if (v > bound) return true;
    }
    return v > bound;
  };
  if (pow2_exceeds(ii_A, 2 * static_cast<Int>(n))) {
    p.warnings.push_back("2^ii_A exceeds the degree 2n = " +
                         std::to_string(2 * n));
  }
  if (ii_plus > n - 1) {
    p.warnings.push_back("2^ii_plus exceeds the Clifford component degree 2^(n-1)");
  }
  if (ii_minus > n - 1) {
    p.warnings.push_back("2^ii_minus exceeds the Clifford component degree 2^(n-1)");
  }
  return p;
}

namespace {

struct ReferenceClasses {
  ClassVec c_zero;
  ClassVec c_A;     // class of omega_1
  ClassVec c_plus;  // class of omega_{n-1}
  ClassVec c_minus; // class of omega_n
};

ReferenceClasses reference_classes(const CocenterGroup& cg) {
  const int n = cg.rs.rank;
  return ReferenceClasses{
      class_zero(cg),
      cg.omega_bar[0],
      cg.omega_bar[static_cast<std::size_t>(n - 2)],
      cg.omega_bar[static_cast<std::size_t>(n - 1)],
  };
}

} // namespace

int class_valuation(const IndexProfile& profile, const CocenterGroup& cg,
                    const ClassVec& cls) {
  if (cg.rs != profile.rs) {
    throw std::invalid_argument("profile and cocenter root systems disagree");
  }
  if (cls.size() != cg.factors.size()) {
    throw std::invalid_argument("class coordinate count mismatch");
  }
  const auto ref = reference_classes(cg);
  if (cls == ref.c_zero) return 0;
  if (cls == ref.c_A) return profile.ii_A;
  if (cls == ref.c_plus) return profile.ii_plus;
  if (cls == ref.c_minus) return profile.ii_minus;
  throw std::logic_error("class is not in the type-D cocenter");
}

int common_index(const IndexProfile& profile) {
  const CocenterGroup cg = cocenter(profile.rs);
  const int n = profile.rs.rank;

  // Degree-1 generator weights: omega_1 and omega_n for even rank,
  // omega_n alone for odd rank.
  std::vector<ClassVec> gens;
  if (n % 2 == 0) {
    gens.push_back(cg.omega_bar[0]);
  }
  gens.push_back(cg.omega_bar[static_cast<std::size_t>(n - 1)]);

  std::vector<Int> orders;
  for (const auto& g : gens) orders.push_back(class_order(cg, g));

  int best = -1;
  std::vector<Int> a(gens.size(), 0);
  while (true) {
    const bool some_odd =
        std::any_of(a.begin(), a.end(), [](Int x) { return x % 2 == 1; });
    if (some_odd) {
      ClassVec sum = class_zero(cg);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        sum = class_add(cg, sum, class_scale(cg, a[i], gens[i]));
      }
      const int v = class_valuation(profile, cg, sum);
      if (best < 0 || v < best) best = v;
    }
    std::size_t i = 0;
    for (; i < a.size(); ++i) {
      if (++a[i] < orders[i]) break;
      a[i] = 0;
    }
    if (i == a.size()) break;
  }
  return best;
}

int rho_index_valuation(const IndexProfile& profile, const SteinbergEntry& entry) {
  if (entry.w.root_action.rows() != profile.rs.rank) {
    throw std::invalid_argument("entry and profile root systems disagree");
  }
  const CocenterGroup cg = cocenter(profile.rs);
  return class_valuation(profile, cg, entry.cls);
}

std::vector<RationalCycle> rational_cycle_exponents(
    const IndexProfile& profile, const std::vector<SteinbergEntry>& table) {
  const CocenterGroup cg = cocenter(profile.rs);
  std::vector<RationalCycle> out;
  out.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const int v = class_valuation(profile, cg, table[i].cls);
    Int e = 1;
    for (int t = 0; t < v; ++t) e *= 2;
    out.push_back(RationalCycle{i, e});
  }
  return out;
}

namespace {

BoundInterval single_interval(int hi_raw, int cap, int lower_driver) {
  BoundInterval iv;
  iv.cap = cap;
  iv.hi = std::min(hi_raw, cap);
  iv.lo = 0;
  if (lower_driver > 0) iv.lo = 1;
  if (lower_driver > 1 && cap > 1) iv.lo = 2;
  if (iv.lo > iv.hi) {
    throw std::domain_error("bounds inconsistent: lower bound exceeds upper bound");
  }
  return iv;
}

} // namespace

BoundsResult degree_one_bounds(const IndexProfile& profile,
                               const KacSignature& sig,
                               bool /*isotropy_unknown*/) {
  const int n = profile.rs.rank;
  BoundsResult res;
  res.sig = sig;

  switch (sig.label) {
    case GroupLabel::PGO: {
      if (sig.n_param != n) {
        throw std::invalid_argument("PGO_2n signature parameter must equal the rank");
      }
      const int ii_J = common_index(profile);
      if (n % 2 == 0) {
        // Two degree-1 parameters, capped by k_1 and k_2.
        BoundInterval j1 = single_interval(profile.ii_A, sig.k[0], ii_J);
        const int min_pm = std::min(profile.ii_plus, profile.ii_minus);
        BoundInterval j2 = single_interval(min_pm, sig.k[1], ii_J);
        if (min_pm == 0) {
          // Half-spin refinement: with a split Clifford component the
          // first parameter is driven by ii_A alone.
          BoundInterval refined = single_interval(profile.ii_A, sig.k[0], profile.ii_A);
          j1.lo = std::max(j1.lo, refined.lo);
          if (j1.lo > j1.hi) {
            throw std::domain_error(
                "bounds inconsistent: lower bound exceeds upper bound");
          }
        }
        res.intervals = {j1, j2};
      } else {
        // Odd rank: the reduced tuple drops the k_1 = 0 slot; the single
        // degree-1 parameter is capped by k_2.
        res.intervals = {single_interval(profile.ii_plus, sig.k[1], ii_J)};
      }
      break;
    }
    case GroupLabel::SO: {
      if (sig.n_param != 2 * n) {
        throw std::invalid_argument(
            "SO_m signature parameter must equal the degree 2n");
      }
      if (profile.ii_A != 0) {
        throw std::domain_error(
            "SO bounds require a split algebra (ii_A = 0): a quadratic form "
            "only exists when A is an endomorphism algebra");
      }
      if (profile.ii_plus != profile.ii_minus) {
        throw std::domain_error(
            "SO bounds require ii_plus = ii_minus (both Clifford components "
            "of a quadratic form have the same index)");
      }
      res.intervals = {single_interval(profile.ii_plus, sig.k[0], profile.ii_plus)};
      break;
    }
    case GroupLabel::SpinHalf: {
      if (sig.n_param != n) {
        throw std::invalid_argument(
            "SpinHalf_2n signature parameter must equal the rank");
      }
      if (std::min(profile.ii_plus, profile.ii_minus) != 0) {
        throw std::domain_error(
            "half-spin bounds require a split Clifford component "
            "(min{ii_plus, ii_minus} = 0)");
      }
      res.intervals = {single_interval(profile.ii_A, sig.k[0], profile.ii_A)};
      break;
    }
    case GroupLabel::Spin:
      throw std::invalid_argument(
          "Spin signatures describe odd orthogonal groups; index profiles "
          "model family D only");
  }
  return res;
}

} // namespace jinv
