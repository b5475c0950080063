#include "jinv/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace jinv {

std::string to_string(IsotropyStatus s) {
  switch (s) {
    case IsotropyStatus::hyperbolic: return "hyperbolic";
    case IsotropyStatus::isotropic_nonhyperbolic: return "isotropic non-hyperbolic";
    case IsotropyStatus::anisotropic: return "anisotropic";
  }
  throw std::invalid_argument("unknown isotropy status");
}

std::string to_string(Slot s) {
  switch (s) {
    case Slot::A: return "A";
    case Slot::B: return "B";
    case Slot::C: return "C";
  }
  throw std::invalid_argument("unknown slot");
}

const std::vector<Dim8Row>& dim8_table() {
  static const std::vector<Dim8Row> rows = {
      {{0, 0}, {}, 0, 0, {4}, "hyperbolic", IsotropyStatus::hyperbolic},
      {{1, 0}, {1}, 1, 1, {2, 4}, "Pf_2 perp 2H",
       IsotropyStatus::isotropic_nonhyperbolic},
      {{2, 0}, {1, 2}, 2, 2, {1, 2, 4}, "Al_6 perp H",
       IsotropyStatus::isotropic_nonhyperbolic},
      {{0, 1}, {3}, 0, 1, {0, 4}, "Pf_3", IsotropyStatus::anisotropic},
      {{1, 1}, {1, 3}, 1, 1, {0, 2, 4}, "<1,-a> tensor q'",
       IsotropyStatus::anisotropic},
      {{2, 1}, {1, 2, 3}, 2, 2, {0, 1, 2, 4}, "Pf_2 perp Pf_2 or transfer",
       IsotropyStatus::anisotropic},
      {{2, 1}, {1, 2, 3}, 3, 3, {0, 1, 2, 4}, "generic",
       IsotropyStatus::anisotropic},
  };
  return rows;
}

JTuple dim8_J_from_pattern(const std::vector<int>& pattern) {
  for (const auto& row : dim8_table()) {
    if (row.pattern == pattern) return row.J;
  }
  throw std::domain_error("splitting pattern is not a documented dimension-8 pattern");
}

std::vector<int> dim8_pattern_from_J(const JTuple& J) {
  for (const auto& row : dim8_table()) {
    if (row.J == J) return row.pattern;
  }
  throw std::domain_error("tuple is not a documented dimension-8 value");
}

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::domain_error("inconsistent profile: " + what);
}

ClassificationRow row_from_dim8(const Dim8Row& r) {
  return ClassificationRow{r.J, r.vishik, r.description, r.pattern};
}

ClassificationRow classify_qform_dim8(const QFormProfile& q) {
  const Dim8Row* found = nullptr;
  for (const auto& row : dim8_table()) {
    if (row.status == q.status && row.ii_S == q.ii_S) {
      found = &row;
      break;
    }
  }
  if (found == nullptr) {
    reject("no dimension-8 form is " + to_string(q.status) + " with ii_S = " +
           std::to_string(q.ii_S) +
           " (isotropic non-hyperbolic requires ii_S in {1, 2})");
  }
  if (q.splitting_pattern && *q.splitting_pattern != found->pattern) {
    reject("the given splitting pattern does not match the documented "
           "dimension-8 row for this profile");
  }
  return row_from_dim8(*found);
}

ClassificationRow classify_qform_dim10(const QFormProfile& q) {
  if (!q.splitting_pattern) {
    throw std::domain_error(
        "undocumented: dimension-10 classification requires one of the "
        "documented splitting patterns (0,2,3,5) or (2,3,5)");
  }
  const std::vector<int> aniso_pat = {0, 2, 3, 5};
  const std::vector<int> iso_pat = {2, 3, 5};
  if (*q.splitting_pattern == aniso_pat) {
    if (q.status != IsotropyStatus::anisotropic) {
      reject("splitting pattern (0,2,3,5) begins with Witt index 0, so the "
             "form is anisotropic");
    }
    if (q.ii_S != 2) {
      reject("the documented pattern (0,2,3,5) has Clifford index 4 (ii_S = 2)");
    }
    return ClassificationRow{{2, 0}, std::nullopt, "Pfister neighbor",
                             *q.splitting_pattern};
  }
  if (*q.splitting_pattern == iso_pat) {
    if (q.status != IsotropyStatus::isotropic_nonhyperbolic) {
      reject("splitting pattern (2,3,5) begins with Witt index 2 < 5, so the "
             "form is isotropic and non-hyperbolic");
    }
    if (q.ii_S != 2) {
      reject("the documented pattern (2,3,5) has Clifford index 4 (ii_S = 2)");
    }
    return ClassificationRow{{2, 0}, std::nullopt, "Al_6 perp 2H",
                             *q.splitting_pattern};
  }
  throw std::domain_error(
      "undocumented: the only documented dimension-10 splitting patterns are "
      "(0,2,3,5) and (2,3,5)");
}

} // namespace

ClassificationRow classify_qform(const QFormProfile& q) {
  if (q.dim < 4 || q.dim % 2 != 0) {
    throw std::invalid_argument("quadratic form dimension must be even and >= 4");
  }
  if (q.ii_S < 0) {
    throw std::invalid_argument("ii_S must be non-negative");
  }
  if (q.ii_S > q.dim / 2 - 1) {
    reject("ii_S exceeds dim/2 - 1 (the Clifford components have degree "
           "2^(dim/2 - 1))");
  }
  if (q.status == IsotropyStatus::hyperbolic && q.ii_S != 0) {
    reject("a hyperbolic form has split Clifford algebra (ii_S = 0)");
  }

  switch (q.dim) {
    case 4: {
      if (q.splitting_pattern) {
        throw std::domain_error(
            "undocumented: splitting patterns are documented for dimensions 8 "
            "and 10 only");
      }
      // Trivial discriminant in dimension 4: isotropic means hyperbolic,
      // and anisotropy is equivalent to a non-split Clifford component.
      if (q.status == IsotropyStatus::isotropic_nonhyperbolic) {
        reject("an isotropic dimension-4 form with trivial discriminant is "
               "hyperbolic");
      }
      if (q.status == IsotropyStatus::anisotropic && q.ii_S != 1) {
        reject("an anisotropic dimension-4 form with trivial discriminant has "
               "non-split Clifford components (ii_S = 1)");
      }
      return ClassificationRow{
          {q.ii_S},
          std::nullopt,
          q.status == IsotropyStatus::hyperbolic ? "hyperbolic" : "Pf_2 similar",
          std::nullopt};
    }
    case 6: {
      if (q.splitting_pattern) {
        throw std::domain_error(
            "undocumented: splitting patterns are documented for dimensions 8 "
            "and 10 only");
      }
      // Albert forms: the status and ii_S determine each other.
      const int expected =
          q.status == IsotropyStatus::hyperbolic
              ? 0
              : q.status == IsotropyStatus::isotropic_nonhyperbolic ? 1 : 2;
      if (q.ii_S != expected) {
        reject("a dimension-6 form with trivial discriminant is " +
               to_string(q.status) + " exactly when ii_S = " +
               std::to_string(expected));
      }
      static const char* tags[3] = {"hyperbolic", "Pf_2 perp H", "Al_6"};
      return ClassificationRow{{q.ii_S}, std::nullopt, tags[expected], std::nullopt};
    }
    case 8:
      return classify_qform_dim8(q);
    case 10:
      return classify_qform_dim10(q);
    default:
      throw std::domain_error(
          "undocumented: classification covers dimensions 4, 6, 8 and the two "
          "documented dimension-10 patterns");
  }
}

namespace {

void check_involution_common(const InvolutionProfile& p) {
  if (p.ii_A < 0 || p.ii_plus < 0 || p.ii_minus < 0) {
    throw std::invalid_argument("index valuations must be non-negative");
  }
}

ClassificationRow classify_involution_deg4(const InvolutionProfile& p) {
  // Triangle inequalities as for any trivial-discriminant triple.
  if (p.ii_A > p.ii_plus + p.ii_minus || p.ii_plus > p.ii_A + p.ii_minus ||
      p.ii_minus > p.ii_A + p.ii_plus) {
    reject("the three index valuations must satisfy the triangle inequalities");
  }
  const bool hyp_by_clifford = std::min(p.ii_plus, p.ii_minus) == 0;
  if (p.status == IsotropyStatus::isotropic_nonhyperbolic) {
    reject("a degree-4 orthogonal involution with trivial discriminant that "
           "is isotropic is hyperbolic");
  }
  if (p.status == IsotropyStatus::hyperbolic && !hyp_by_clifford) {
    reject("a degree-4 involution is hyperbolic exactly when one Clifford "
           "component is split; both components are non-split here");
  }
  if (p.status == IsotropyStatus::anisotropic && hyp_by_clifford) {
    reject("one Clifford component is split, which makes a degree-4 "
           "involution hyperbolic, not anisotropic");
  }
  const int j1 = p.ii_A > 0 ? 1 : 0;
  const int j2 = p.status == IsotropyStatus::hyperbolic ? 0 : 1;
  return ClassificationRow{{j1, j2}, std::nullopt, to_string(p.status),
                           std::nullopt};
}

ClassificationRow classify_involution_deg6(const InvolutionProfile& p) {
  if (p.ii_plus != p.ii_minus) {
    reject("for degree 6 the two Clifford components have the same index "
           "(ii_plus must equal ii_minus)");
  }
  const int ii_S = p.ii_plus;
  if (ii_S > 2) {
    reject("degree-6 Clifford components have degree 4, so ii_S <= 2");
  }
  if (ii_S <= 1 && p.ii_A != 0) {
    reject("a Clifford component of index <= 2 has exponent <= 2, forcing "
           "the degree-6 algebra to be split (ii_A = 0)");
  }
  if (p.ii_A > 0) {
    if (p.status != IsotropyStatus::anisotropic) {
      reject("a non-split degree-6 algebra carries only anisotropic "
             "orthogonal involutions");
    }
  } else {
    const int expected =
        p.status == IsotropyStatus::hyperbolic
            ? 0
            : p.status == IsotropyStatus::isotropic_nonhyperbolic ? 1 : 2;
    if (ii_S != expected) {
      reject("a split degree-6 involution is " + to_string(p.status) +
             " exactly when ii_S = " + std::to_string(expected));
    }
  }
  static const char* tags[3] = {"hyperbolic", "isotropic non-hyperbolic",
                                "anisotropic"};
  const int tag_index = p.status == IsotropyStatus::hyperbolic
                            ? 0
                            : p.status == IsotropyStatus::isotropic_nonhyperbolic
                                  ? 1
                                  : 2;
  return ClassificationRow{{ii_S}, std::nullopt, tags[tag_index], std::nullopt};
}

} // namespace

ClassificationRow classify_involution(const InvolutionProfile& p) {
  check_involution_common(p);
  switch (p.degree) {
    case 4: return classify_involution_deg4(p);
    case 6: return classify_involution_deg6(p);
    case 8:
      throw std::invalid_argument(
          "degree 8 is trialitarian: use classify_triple");
    default:
      throw std::invalid_argument(
          "involution classification covers degrees 4 and 6");
  }
}

TripleResult classify_triple(const InvolutionProfile& p) {
  check_involution_common(p);
  if (p.degree != 8) {
    throw std::invalid_argument("classify_triple requires degree 8");
  }
  const int v1 = p.ii_A, v2 = p.ii_plus, v3 = p.ii_minus;
  if (!(v1 <= v2 && v2 <= v3)) {
    throw std::invalid_argument(
        "the three valuations must be sorted ascending (slots A <= B <= C)");
  }
  if (v3 > v1 + v2) {
    reject("the three index valuations must satisfy the triangle inequalities");
  }

  const bool anisotropic = p.status == IsotropyStatus::anisotropic;
  if (!anisotropic) {
    if (v3 == 3) {
      reject("a triple containing a division member (valuation 3) is "
             "anisotropic: an isotropic member would force the split case, "
             "where ii_S = 3 forms are anisotropic");
    }
    if (v3 >= 2 && v1 > 0) {
      reject("an isotropic triple with a member of index >= 4 contains a "
             "split member (the smallest valuation must be 0)");
    }
  }
  if (p.status == IsotropyStatus::hyperbolic) {
    int lowest_other = 4;
    if (p.designated != Slot::A) lowest_other = std::min(lowest_other, v1);
    if (p.designated != Slot::B) lowest_other = std::min(lowest_other, v2);
    if (p.designated != Slot::C) lowest_other = std::min(lowest_other, v3);
    if (lowest_other != 0) {
      reject("a hyperbolic involution has a split Clifford component, and "
             "the components of the designated member are the other two "
             "members of the triple");
    }
  }
  if (p.status == IsotropyStatus::isotropic_nonhyperbolic) {
    const int v_designated =
        p.designated == Slot::A ? v1 : p.designated == Slot::B ? v2 : v3;
    if (v_designated == 0 && v2 == 0) {
      reject("with a split designated member the involution is adjoint to a "
             "quadratic form, and an isotropic non-hyperbolic dimension-8 "
             "form has ii_S in {1, 2}");
    }
  }

  const int j = std::min(v1, 2);
  const int jp = std::min(v2, 2);
  const int j3 = anisotropic ? 1 : 0;

  TripleResult res;
  res.designated = p.designated;
  res.rows = {
      TripleRow{Slot::A, {j, jp, j3}},
      TripleRow{Slot::B, {jp, j, j3}},
      TripleRow{Slot::C, {jp, j, j3}},
  };

  const auto& excluded = excluded_values();
  for (const auto& row : res.rows) {
    if (std::find(excluded.begin(), excluded.end(), row.J) != excluded.end()) {
      throw std::logic_error(
          "internal error: a consistent profile produced an excluded value");
    }
  }
  return res;
}

const std::vector<JTuple>& excluded_values() {
  static const std::vector<JTuple> values = {{1, 2, 0}, {2, 1, 0}, {2, 2, 0}};
  return values;
}

bool occurs(const JTuple& J) {
  const auto sig = kac_signature(GroupLabel::PGO, 4);
  if (static_cast<int>(J.size()) != sig.r || !is_admissible(sig, J)) {
    return false;
  }
  const auto& excluded = excluded_values();
  return std::find(excluded.begin(), excluded.end(), J) == excluded.end();
}

bool is_pattern_Is(const JTuple& J, const KacSignature& sig, int s) {
  if (sig.label != GroupLabel::PGO) {
    throw std::invalid_argument("the pattern test applies to PGO signatures");
  }
  if (static_cast<int>(J.size()) != sig.r) {
    throw std::invalid_argument("tuple length does not match the signature");
  }
  if (s <= 2) {
    throw std::invalid_argument("the pattern test requires s > 2");
  }
  int last = 1;
  for (int t = 0; t < s - 2; ++t) last *= 2; // 2^(s-2)
  if (last > sig.r) {
    throw std::invalid_argument("s out of range for the signature: 2^(s-2) > r");
  }
  for (int pos = 2; pos <= last; ++pos) {
    if (J[static_cast<std::size_t>(pos - 1)] != 0) return false;
  }
  return true;
}

bool witt_consistency(const JTuple& a, const JTuple& b) {
  JTuple za, zb;
  std::copy_if(a.begin(), a.end(), std::back_inserter(za),
               [](int x) { return x != 0; });
  std::copy_if(b.begin(), b.end(), std::back_inserter(zb),
               [](int x) { return x != 0; });
  return za == zb;
}

} // namespace jinv
