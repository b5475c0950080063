// jinv: command-line surface for the J-invariant library.
//
// Subcommands: kac, admissible, steinberg, charmap, cocenter, bounds,
// poincare, classify-qf, classify-inv, triple, atlas.
//
// Exit codes: 0 on success (including --help), 2 on usage errors,
// 1 on domain inconsistencies (the violated invariant is named on stderr).
//
// Every invocation is deterministic: identical arguments produce
// byte-identical output. --json switches from human tables to JSON.

#include "CLI11.hpp"
#include "json.hpp"

#include "jinv/bounds.hpp"
#include "jinv/charmap.hpp"
#include "jinv/chow.hpp"
#include "jinv/classify.hpp"
#include "jinv/cocenter.hpp"
#include "jinv/rootsystem.hpp"
#include "jinv/steinberg.hpp"
#include "jinv/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using ojson = nlohmann::ordered_json;

namespace {

// Usage problems discovered after CLI11 parsing (e.g. flag combinations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, jinv::GroupLabel> group_map = {
    {"SO", jinv::GroupLabel::SO},
    {"Spin", jinv::GroupLabel::Spin},
    {"SpinHalf", jinv::GroupLabel::SpinHalf},
    {"PGO", jinv::GroupLabel::PGO},
};

const std::map<std::string, jinv::Family> family_map = {
    {"A", jinv::Family::A},
    {"B", jinv::Family::B},
    {"D", jinv::Family::D},
};

const std::map<std::string, jinv::LatticeChoice> lattice_map = {
    {"adjoint", jinv::LatticeChoice::adjoint},
    {"simply_connected", jinv::LatticeChoice::simply_connected},
    {"special_orthogonal", jinv::LatticeChoice::special_orthogonal},
    {"half_spin_plus", jinv::LatticeChoice::half_spin_plus},
    {"half_spin_minus", jinv::LatticeChoice::half_spin_minus},
};

const std::map<std::string, jinv::Slot> slot_map = {
    {"A", jinv::Slot::A},
    {"B", jinv::Slot::B},
    {"C", jinv::Slot::C},
};

template <typename T>
std::string fmt_tuple(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string fmt_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) os << ',';
    os << word[i];
  }
  return os.str();
}

std::string fmt_descent(const std::vector<int>& descent) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < descent.size(); ++i) {
    if (i > 0) os << ',';
    os << descent[i];
  }
  os << '}';
  return os.str();
}

std::vector<jinv::Int> vec_to_std(const jinv::IVec& v) {
  return {v.data(), v.data() + v.size()};
}

std::vector<std::vector<jinv::Int>> mat_rows(const jinv::IMat& m) {
  std::vector<std::vector<jinv::Int>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<jinv::Int> row(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row[static_cast<std::size_t>(j)] = m(i, j);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Shared state for the three --anisotropic/--isotropic/--hyperbolic flags.
struct StatusFlags {
  bool anisotropic = false;
  bool isotropic = false;
  bool hyperbolic = false;

  void attach(CLI::App* sub) {
    sub->add_flag("--anisotropic", anisotropic, "profile is anisotropic");
    sub->add_flag("--isotropic", isotropic,
                  "profile is isotropic and non-hyperbolic");
    sub->add_flag("--hyperbolic", hyperbolic, "profile is hyperbolic");
  }

  jinv::IsotropyStatus require_one() const {
    const int count = (anisotropic ? 1 : 0) + (isotropic ? 1 : 0) +
                      (hyperbolic ? 1 : 0);
    if (count != 1) {
      throw UsageError(
          "exactly one of --anisotropic, --isotropic, --hyperbolic is "
          "required");
    }
    if (anisotropic) return jinv::IsotropyStatus::anisotropic;
    if (isotropic) return jinv::IsotropyStatus::isotropic_nonhyperbolic;
    return jinv::IsotropyStatus::hyperbolic;
  }
};

void require_length(const std::vector<int>& v, std::size_t len,
                    const std::string& flag) {
  if (v.size() != len) {
    throw UsageError(flag + " requires exactly " + std::to_string(len) +
                     " comma-separated integers");
  }
}

// ---------------------------------------------------------------- kac ----

struct KacArgs {
  jinv::GroupLabel group = jinv::GroupLabel::SO;
  int n = 0;
  jinv::Int p = 2;
  bool json = false;
};

void run_kac(const KacArgs& a) {
  const auto sig = jinv::kac_signature(a.group, a.n, a.p);
  if (a.json) {
    ojson j;
    j["r"] = sig.r;
    j["d"] = sig.d;
    j["k"] = sig.k;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "signature: group = " << jinv::to_string(sig.label)
            << ", n = " << sig.n_param << ", p = " << sig.p << "\n"
            << "r = " << sig.r << "\n"
            << "d = " << fmt_tuple(sig.d) << "\n"
            << "k = " << fmt_tuple(sig.k) << "\n";
}

// --------------------------------------------------------- admissible ----

struct AdmissibleArgs {
  jinv::GroupLabel group = jinv::GroupLabel::SO;
  int n = 0;
  jinv::Int p = 2;
  bool json = false;
};

void run_admissible(const AdmissibleArgs& a) {
  const auto sig = jinv::kac_signature(a.group, a.n, a.p);
  const auto tuples = jinv::admissible_tuples(sig);
  if (a.json) {
    ojson j;
    j["group"] = jinv::to_string(sig.label);
    j["n"] = sig.n_param;
    j["p"] = sig.p;
    j["r"] = sig.r;
    j["k"] = sig.k;
    j["count"] = tuples.size();
    j["tuples"] = tuples;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "signature: group = " << jinv::to_string(sig.label)
            << ", n = " << sig.n_param << ", p = " << sig.p << "; r = "
            << sig.r << ", k = " << fmt_tuple(sig.k) << "\n"
            << "admissible tuples: " << tuples.size() << "\n";
  for (const auto& t : tuples) std::cout << fmt_tuple(t) << "\n";
}

// ---------------------------------------------------------- steinberg ----

struct SteinbergArgs {
  jinv::Family family = jinv::Family::A;
  int rank = 0;
  std::size_t cap = jinv::default_weyl_cap;
  bool json = false;
};

void run_steinberg(const SteinbergArgs& a) {
  const jinv::RootSystem rs(a.family, a.rank);
  const auto cg = jinv::cocenter(rs);
  const auto table = jinv::steinberg_table(rs, a.cap);
  if (a.json) {
    ojson j;
    j["family"] = jinv::to_string(rs.family);
    j["rank"] = rs.rank;
    j["order"] = table.size();
    j["factors"] = cg.factors;
    ojson entries = ojson::array();
    for (const auto& e : table) {
      ojson row;
      row["word"] = e.w.word;
      row["descent"] = e.descent_set;
      row["rho"] = vec_to_std(e.rho.coords);
      row["cls"] = e.cls;
      entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "family " << jinv::to_string(rs.family) << ", rank " << rs.rank
            << ": |W| = " << table.size() << ", cocenter factors "
            << fmt_tuple(cg.factors) << "\n";
  for (const auto& e : table) {
    std::cout << "word=" << fmt_word(e.w.word)
              << "  descent=" << fmt_descent(e.descent_set)
              << "  rho=" << fmt_tuple(vec_to_std(e.rho.coords))
              << "  cls=" << fmt_tuple(e.cls) << "\n";
  }
}

// ------------------------------------------------------------ charmap ----

struct CharmapArgs {
  jinv::Family family = jinv::Family::A;
  int rank = 0;
  jinv::LatticeChoice lattice = jinv::LatticeChoice::adjoint;
  jinv::Int p = 2;
  bool json = false;
};

void run_charmap(const CharmapArgs& a) {
  const jinv::RootSystem rs(a.family, a.rank);
  const auto image = jinv::charmap_image(rs, a.lattice, a.p);
  const int s = jinv::degree_one_generator_count(rs, a.lattice, a.p);
  if (a.json) {
    ojson j;
    j["family"] = jinv::to_string(rs.family);
    j["rank"] = rs.rank;
    j["lattice"] = jinv::to_string(a.lattice);
    j["p"] = a.p;
    j["dim"] = image.dim();
    j["s"] = s;
    j["basis"] = mat_rows(image.basis);
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "family " << jinv::to_string(rs.family) << ", rank " << rs.rank
            << ", lattice " << jinv::to_string(a.lattice) << ", p = " << a.p
            << "\n"
            << "image dimension = " << image.dim()
            << ", degree-one generators s = " << s << "\n"
            << "basis:\n";
  for (const auto& row : mat_rows(image.basis)) {
    std::cout << fmt_tuple(row) << "\n";
  }
}

// ----------------------------------------------------------- cocenter ----

struct CocenterArgs {
  jinv::Family family = jinv::Family::A;
  int rank = 0;
  bool json = false;
};

void run_cocenter(const CocenterArgs& a) {
  const jinv::RootSystem rs(a.family, a.rank);
  const auto cg = jinv::cocenter(rs);
  if (a.json) {
    ojson j;
    j["family"] = jinv::to_string(rs.family);
    j["rank"] = rs.rank;
    j["order"] = jinv::cocenter_order(cg);
    j["factors"] = cg.factors;
    j["omega_bar"] = cg.omega_bar;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "family " << jinv::to_string(rs.family) << ", rank " << rs.rank
            << ": cocenter order " << jinv::cocenter_order(cg)
            << ", invariant factors " << fmt_tuple(cg.factors) << "\n"
            << "fundamental weight classes:\n";
  for (std::size_t i = 0; i < cg.omega_bar.size(); ++i) {
    std::cout << "omega_" << (i + 1) << " -> " << fmt_tuple(cg.omega_bar[i])
              << "\n";
  }
}

// ------------------------------------------------------------- bounds ----

struct BoundsArgs {
  int rank = 0;
  std::vector<int> ii;
  jinv::GroupLabel group = jinv::GroupLabel::PGO;
  jinv::Int p = 2;
  bool no_validate = false;
  bool json = false;
};

int signature_n_for(jinv::GroupLabel label, int rank) {
  switch (label) {
    case jinv::GroupLabel::SO: return 2 * rank;
    case jinv::GroupLabel::Spin: return 2 * rank;
    case jinv::GroupLabel::SpinHalf: return rank;
    case jinv::GroupLabel::PGO: return rank;
  }
  throw std::invalid_argument("unknown group label");
}

void run_bounds(const BoundsArgs& a) {
  require_length(a.ii, 3, "--ii");
  const jinv::RootSystem rs(jinv::Family::D, a.rank);
  const auto profile = jinv::make_index_profile(rs, a.ii[0], a.ii[1], a.ii[2],
                                                !a.no_validate);
  const auto sig =
      jinv::kac_signature(a.group, signature_n_for(a.group, a.rank), a.p);
  const auto res = jinv::degree_one_bounds(profile, sig);
  const int ii_J = jinv::common_index(profile);
  if (a.json) {
    ojson j;
    j["family"] = "D";
    j["rank"] = a.rank;
    j["ii"] = a.ii;
    j["group"] = jinv::to_string(sig.label);
    j["n"] = sig.n_param;
    j["k"] = sig.k;
    j["common_index"] = ii_J;
    ojson ivs = ojson::array();
    for (const auto& iv : res.intervals) {
      ojson o;
      o["lo"] = iv.lo;
      o["hi"] = iv.hi;
      o["cap"] = iv.cap;
      ivs.push_back(std::move(o));
    }
    j["intervals"] = std::move(ivs);
    j["warnings"] = profile.warnings;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "profile: D_" << a.rank << ", ii_A = " << a.ii[0]
            << ", ii_plus = " << a.ii[1] << ", ii_minus = " << a.ii[2] << "\n"
            << "signature: group = " << jinv::to_string(sig.label)
            << ", n = " << sig.n_param << "; k = " << fmt_tuple(sig.k) << "\n"
            << "common index ii_J = " << ii_J << "\n";
  for (std::size_t i = 0; i < res.intervals.size(); ++i) {
    const auto& iv = res.intervals[i];
    std::cout << "j_" << (i + 1) << " in [" << iv.lo << ", " << iv.hi
              << "] (cap " << iv.cap << ")\n";
  }
  for (const auto& w : profile.warnings) std::cout << "warning: " << w << "\n";
}

// ----------------------------------------------------------- poincare ----

struct PoincareArgs {
  jinv::GroupLabel group = jinv::GroupLabel::SO;
  int n = 0;
  jinv::Int p = 2;
  std::vector<int> J;
  bool json = false;
};

void run_poincare(const PoincareArgs& a) {
  const auto sig = jinv::kac_signature(a.group, a.n, a.p);
  const auto coeffs = jinv::poincare_polynomial(sig, a.J);
  jinv::Int sum = 0;
  for (auto c : coeffs) sum += c;
  if (a.json) {
    ojson j;
    j["group"] = jinv::to_string(sig.label);
    j["n"] = sig.n_param;
    j["p"] = sig.p;
    j["J"] = a.J;
    j["coefficients"] = coeffs;
    j["sum"] = sum;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "signature: group = " << jinv::to_string(sig.label)
            << ", n = " << sig.n_param << ", p = " << sig.p << "; J = "
            << fmt_tuple(a.J) << "\n"
            << "coefficients (degree 0.." << (coeffs.size() - 1)
            << "): " << fmt_tuple(coeffs) << "\n"
            << "sum = " << sum << "\n";
}

// -------------------------------------------------- classification I/O ----

void print_row_human(const jinv::ClassificationRow& row) {
  std::cout << "J = " << fmt_tuple(row.J) << "\n";
  if (row.vishik_J) std::cout << "vishik = " << fmt_descent(*row.vishik_J) << "\n";
  if (row.splitting_pattern) {
    std::cout << "splitting pattern = " << fmt_tuple(*row.splitting_pattern)
              << "\n";
  }
  std::cout << "description: " << row.description << "\n";
}

void append_row_json(ojson& j, const jinv::ClassificationRow& row) {
  j["J"] = row.J;
  if (row.vishik_J) j["vishik"] = *row.vishik_J;
  if (row.splitting_pattern) j["pattern"] = *row.splitting_pattern;
  j["description"] = row.description;
}

// -------------------------------------------------------- classify-qf ----

struct ClassifyQfArgs {
  int dim = 0;
  int ii_S = 0;
  StatusFlags status;
  std::vector<int> pattern;
  bool pattern_given = false;
  bool json = false;
};

void run_classify_qf(const ClassifyQfArgs& a) {
  jinv::QFormProfile q;
  q.dim = a.dim;
  q.ii_S = a.ii_S;
  q.status = a.status.require_one();
  if (a.pattern_given) q.splitting_pattern = a.pattern;
  const auto row = jinv::classify_qform(q);
  if (a.json) {
    ojson j;
    j["dim"] = q.dim;
    j["ii_S"] = q.ii_S;
    j["status"] = jinv::to_string(q.status);
    append_row_json(j, row);
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "dimension " << q.dim << ", ii_S = " << q.ii_S << ", "
            << jinv::to_string(q.status) << "\n";
  print_row_human(row);
}

// ------------------------------------------------------- classify-inv ----

struct ClassifyInvArgs {
  int degree = 0;
  std::vector<int> ii;
  StatusFlags status;
  bool json = false;
};

void run_classify_inv(const ClassifyInvArgs& a) {
  require_length(a.ii, 3, "--ii");
  jinv::InvolutionProfile p;
  p.degree = a.degree;
  p.ii_A = a.ii[0];
  p.ii_plus = a.ii[1];
  p.ii_minus = a.ii[2];
  p.status = a.status.require_one();
  const auto row = jinv::classify_involution(p);
  if (a.json) {
    ojson j;
    j["degree"] = p.degree;
    j["ii"] = a.ii;
    j["status"] = jinv::to_string(p.status);
    append_row_json(j, row);
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "degree " << p.degree << ", ii = " << fmt_tuple(a.ii) << ", "
            << jinv::to_string(p.status) << "\n";
  print_row_human(row);
}

// -------------------------------------------------------------- triple ----

struct TripleArgs {
  std::vector<int> ii;
  StatusFlags status;
  jinv::Slot designate = jinv::Slot::A;
  bool json = false;
};

void run_triple(const TripleArgs& a) {
  require_length(a.ii, 3, "--ii");
  // Sort the valuations ascending, carrying the designated slot with its
  // value (stable, so ties keep the earlier slot).
  std::vector<std::pair<int, int>> tagged = {
      {a.ii[0], 0}, {a.ii[1], 1}, {a.ii[2], 2}};
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  const int want = static_cast<int>(a.designate);
  jinv::Slot designated = jinv::Slot::A;
  std::vector<int> sorted(3);
  for (int i = 0; i < 3; ++i) {
    sorted[static_cast<std::size_t>(i)] = tagged[static_cast<std::size_t>(i)].first;
    if (tagged[static_cast<std::size_t>(i)].second == want) {
      designated = static_cast<jinv::Slot>(i);
    }
  }
  const bool resorted =
      sorted != a.ii || designated != a.designate;
  if (resorted) {
    std::cerr << "note: valuations re-sorted to " << fmt_tuple(sorted)
              << "; designated slot " << jinv::to_string(a.designate)
              << " follows its value to slot " << jinv::to_string(designated)
              << "\n";
  }

  jinv::InvolutionProfile p;
  p.degree = 8;
  p.ii_A = sorted[0];
  p.ii_plus = sorted[1];
  p.ii_minus = sorted[2];
  p.status = a.status.require_one();
  p.designated = designated;
  const auto res = jinv::classify_triple(p);
  if (a.json) {
    ojson j;
    j["ii"] = sorted;
    j["status"] = jinv::to_string(p.status);
    j["designated"] = jinv::to_string(res.designated);
    ojson rows = ojson::array();
    for (const auto& row : res.rows) {
      ojson o;
      o["slot"] = jinv::to_string(row.slot);
      o["J"] = row.J;
      rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "valuations (sorted): " << fmt_tuple(sorted) << ", "
            << jinv::to_string(p.status) << ", designated slot "
            << jinv::to_string(res.designated) << "\n";
  for (const auto& row : res.rows) {
    std::cout << jinv::to_string(row.slot) << ": J = " << fmt_tuple(row.J);
    if (row.slot == res.designated) std::cout << " (designated)";
    std::cout << "\n";
  }
}

// --------------------------------------------------------------- atlas ----

struct AtlasArgs {
  jinv::GroupLabel group = jinv::GroupLabel::PGO;
  int n = 0;
  jinv::Int p = 2;
  bool json = false;
};

void run_atlas(const AtlasArgs& a) {
  const auto sig = jinv::kac_signature(a.group, a.n, a.p);
  const auto tuples = jinv::admissible_tuples(sig);
  // occurrence data is documented for the degree-8 trialitarian case only
  const bool annotate =
      sig.label == jinv::GroupLabel::PGO && sig.n_param == 4 && sig.p == 2;
  if (a.json) {
    ojson j;
    j["group"] = jinv::to_string(sig.label);
    j["n"] = sig.n_param;
    j["p"] = sig.p;
    j["r"] = sig.r;
    j["k"] = sig.k;
    j["count"] = tuples.size();
    ojson rows = ojson::array();
    for (const auto& t : tuples) {
      ojson o;
      o["J"] = t;
      if (annotate) o["occurs"] = jinv::occurs(t);
      rows.push_back(std::move(o));
    }
    j["tuples"] = std::move(rows);
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "signature: group = " << jinv::to_string(sig.label)
            << ", n = " << sig.n_param << ", p = " << sig.p << "; r = "
            << sig.r << ", k = " << fmt_tuple(sig.k) << "\n"
            << "admissible tuples: " << tuples.size() << "\n";
  for (const auto& t : tuples) {
    std::cout << fmt_tuple(t);
    if (annotate) std::cout << (jinv::occurs(t) ? "  occurs" : "  excluded");
    std::cout << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"J-invariant calculator for orthogonal groups and algebras "
               "with orthogonal involution"};
  app.require_subcommand(1);

  KacArgs kac;
  auto* kac_cmd = app.add_subcommand(
      "kac", "Chow-ring signature (r; d_1..d_r; k_1..k_r) of a split group");
  kac_cmd->add_option("--group", kac.group, "group label")
      ->required()
      ->transform(CLI::CheckedTransformer(group_map));
  kac_cmd->add_option("--n", kac.n, "label subscript parameter")->required();
  kac_cmd->add_option("--p", kac.p, "coefficient prime (tabulated: 2)");
  kac_cmd->add_flag("--json", kac.json, "emit JSON");
  kac_cmd->callback([&kac]() { run_kac(kac); });

  AdmissibleArgs adm;
  auto* adm_cmd = app.add_subcommand(
      "admissible", "All tuples satisfying the admissibility restriction");
  adm_cmd->add_option("--group", adm.group, "group label")
      ->required()
      ->transform(CLI::CheckedTransformer(group_map));
  adm_cmd->add_option("--n", adm.n, "label subscript parameter")->required();
  adm_cmd->add_option("--p", adm.p, "coefficient prime (tabulated: 2)");
  adm_cmd->add_flag("--json", adm.json, "emit JSON");
  adm_cmd->callback([&adm]() { run_admissible(adm); });

  SteinbergArgs st;
  auto* st_cmd = app.add_subcommand(
      "steinberg", "Steinberg weight table over the Weyl group");
  st_cmd->add_option("--family", st.family, "root system family")
      ->required()
      ->transform(CLI::CheckedTransformer(family_map));
  st_cmd->add_option("--rank", st.rank, "root system rank")->required();
  st_cmd->add_option("--cap", st.cap, "Weyl enumeration size limit");
  st_cmd->add_flag("--json", st.json, "emit JSON");
  st_cmd->callback([&st]() { run_steinberg(st); });

  CharmapArgs cm;
  auto* cm_cmd = app.add_subcommand(
      "charmap", "Degree-1 characteristic map image mod p");
  cm_cmd->add_option("--family", cm.family, "root system family")
      ->required()
      ->transform(CLI::CheckedTransformer(family_map));
  cm_cmd->add_option("--rank", cm.rank, "root system rank")->required();
  cm_cmd->add_option("--lattice", cm.lattice, "character lattice choice")
      ->required()
      ->transform(CLI::CheckedTransformer(lattice_map));
  cm_cmd->add_option("--p", cm.p, "coefficient prime");
  cm_cmd->add_flag("--json", cm.json, "emit JSON");
  cm_cmd->callback([&cm]() { run_charmap(cm); });

  CocenterArgs cc;
  auto* cc_cmd = app.add_subcommand(
      "cocenter", "Weight lattice modulo root lattice");
  cc_cmd->add_option("--family", cc.family, "root system family")
      ->required()
      ->transform(CLI::CheckedTransformer(family_map));
  cc_cmd->add_option("--rank", cc.rank, "root system rank")->required();
  cc_cmd->add_flag("--json", cc.json, "emit JSON");
  cc_cmd->callback([&cc]() { run_cocenter(cc); });

  BoundsArgs bd;
  auto* bd_cmd = app.add_subcommand(
      "bounds", "Degree-1 J-invariant bounds from index valuations");
  bd_cmd->add_option("--rank", bd.rank, "type-D rank")->required();
  bd_cmd->add_option("--ii", bd.ii, "valuations ii_A,ii_plus,ii_minus")
      ->required()
      ->delimiter(',');
  bd_cmd->add_option("--group", bd.group, "signature to bound against")
      ->required()
      ->transform(CLI::CheckedTransformer(group_map));
  bd_cmd->add_option("--p", bd.p, "coefficient prime (tabulated: 2)");
  bd_cmd->add_flag("--no-validate", bd.no_validate,
                   "skip profile consistency validation");
  bd_cmd->add_flag("--json", bd.json, "emit JSON");
  bd_cmd->callback([&bd]() { run_bounds(bd); });

  PoincareArgs pc;
  auto* pc_cmd = app.add_subcommand(
      "poincare", "Poincare polynomial of the motive for a tuple");
  pc_cmd->add_option("--group", pc.group, "group label")
      ->required()
      ->transform(CLI::CheckedTransformer(group_map));
  pc_cmd->add_option("--n", pc.n, "label subscript parameter")->required();
  pc_cmd->add_option("--p", pc.p, "coefficient prime (tabulated: 2)");
  pc_cmd->add_option("--J", pc.J, "tuple j_1,..,j_r")->required()->delimiter(',');
  pc_cmd->add_flag("--json", pc.json, "emit JSON");
  pc_cmd->callback([&pc]() { run_poincare(pc); });

  ClassifyQfArgs qf;
  auto* qf_cmd = app.add_subcommand(
      "classify-qf", "Classify a quadratic form with trivial discriminant");
  qf_cmd->add_option("--dim", qf.dim, "even dimension >= 4")->required();
  qf_cmd->add_option("--iiS", qf.ii_S, "Clifford index valuation ii_S")
      ->required();
  qf.status.attach(qf_cmd);
  auto* pat_opt =
      qf_cmd->add_option("--pattern", qf.pattern, "splitting pattern")
          ->delimiter(',');
  qf_cmd->add_flag("--json", qf.json, "emit JSON");
  qf_cmd->callback([&qf, pat_opt]() {
    qf.pattern_given = pat_opt->count() > 0;
    run_classify_qf(qf);
  });

  ClassifyInvArgs inv;
  auto* inv_cmd = app.add_subcommand(
      "classify-inv", "Classify an orthogonal involution of degree 4 or 6");
  inv_cmd->add_option("--degree", inv.degree, "algebra degree")->required();
  inv_cmd->add_option("--ii", inv.ii, "valuations ii_A,ii_plus,ii_minus")
      ->required()
      ->delimiter(',');
  inv.status.attach(inv_cmd);
  inv_cmd->add_flag("--json", inv.json, "emit JSON");
  inv_cmd->callback([&inv]() { run_classify_inv(inv); });

  TripleArgs tr;
  auto* tr_cmd = app.add_subcommand(
      "triple", "J-invariants of a degree-8 trialitarian triple");
  tr_cmd->add_option("--ii", tr.ii, "the three index valuations")
      ->required()
      ->delimiter(',');
  tr.status.attach(tr_cmd);
  tr_cmd->add_option("--designate", tr.designate,
                     "which slot is the caller's algebra")
      ->transform(CLI::CheckedTransformer(slot_map));
  tr_cmd->add_flag("--json", tr.json, "emit JSON");
  tr_cmd->callback([&tr]() { run_triple(tr); });

  AtlasArgs at;
  auto* at_cmd = app.add_subcommand(
      "atlas", "Admissible tuples annotated with occurrence data");
  at_cmd->add_option("--group", at.group, "group label")
      ->required()
      ->transform(CLI::CheckedTransformer(group_map));
  at_cmd->add_option("--n", at.n, "label subscript parameter")->required();
  at_cmd->add_option("--p", at.p, "coefficient prime (tabulated: 2)");
  at_cmd->add_flag("--json", at.json, "emit JSON");
  at_cmd->callback([&at]() { run_atlas(at); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
