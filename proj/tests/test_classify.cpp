#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jinv/bounds.hpp"
#include "jinv/chow.hpp"
#include "jinv/classify.hpp"
#include "jinv/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace jinv;

namespace {

QFormProfile qf(int dim, int ii_S, IsotropyStatus status) {
  QFormProfile q;
  q.dim = dim;
  q.ii_S = ii_S;
  q.status = status;
  return q;
}

InvolutionProfile inv(int degree, int a, int b, int c, IsotropyStatus status,
                      Slot designated = Slot::A) {
  InvolutionProfile p;
  p.degree = degree;
  p.ii_A = a;
  p.ii_plus = b;
  p.ii_minus = c;
  p.status = status;
  p.designated = designated;
  return p;
}

constexpr auto aniso = IsotropyStatus::anisotropic;
constexpr auto iso = IsotropyStatus::isotropic_nonhyperbolic;
constexpr auto hyp = IsotropyStatus::hyperbolic;

} // namespace

TEST_CASE("the seven dimension-8 rows") {
  const auto& rows = dim8_table();
  REQUIRE(rows.size() == 7);

  CHECK(rows[0].J == JTuple{0, 0});
  CHECK(rows[0].vishik.empty());
  CHECK(rows[0].ii_S == 0);
  CHECK(rows[0].pattern == std::vector<int>{4});
  CHECK(rows[0].description == "hyperbolic");
  CHECK(rows[0].status == hyp);

  CHECK(rows[1].J == JTuple{1, 0});
  CHECK(rows[1].vishik == std::vector<int>{1});
  CHECK(rows[1].ii_S == 1);
  CHECK(rows[1].ii == 1);
  CHECK(rows[1].pattern == std::vector<int>{2, 4});
  CHECK(rows[1].description == "Pf_2 perp 2H");
  CHECK(rows[1].status == iso);

  CHECK(rows[2].J == JTuple{2, 0});
  CHECK(rows[2].vishik == std::vector<int>{1, 2});
  CHECK(rows[2].ii_S == 2);
  CHECK(rows[2].ii == 2);
  CHECK(rows[2].pattern == std::vector<int>{1, 2, 4});
  CHECK(rows[2].description == "Al_6 perp H");
  CHECK(rows[2].status == iso);

  CHECK(rows[3].J == JTuple{0, 1});
  CHECK(rows[3].vishik == std::vector<int>{3});
  CHECK(rows[3].ii_S == 0);
  CHECK(rows[3].ii == 1);
  CHECK(rows[3].pattern == std::vector<int>{0, 4});
  CHECK(rows[3].description == "Pf_3");
  CHECK(rows[3].status == aniso);

  CHECK(rows[4].J == JTuple{1, 1});
  CHECK(rows[4].vishik == std::vector<int>{1, 3});
  CHECK(rows[4].ii_S == 1);
  CHECK(rows[4].pattern == std::vector<int>{0, 2, 4});
  CHECK(rows[4].description == "<1,-a> tensor q'");
  CHECK(rows[4].status == aniso);

  CHECK(rows[5].J == JTuple{2, 1});
  CHECK(rows[5].vishik == std::vector<int>{1, 2, 3});
  CHECK(rows[5].ii_S == 2);
  CHECK(rows[5].ii == 2);
  CHECK(rows[5].pattern == std::vector<int>{0, 1, 2, 4});
  CHECK(rows[5].description == "Pf_2 perp Pf_2 or transfer");
  CHECK(rows[5].status == aniso);

  CHECK(rows[6].J == JTuple{2, 1});
  CHECK(rows[6].ii_S == 3);
  CHECK(rows[6].ii == 3);
  CHECK(rows[6].pattern == std::vector<int>{0, 1, 2, 4});
  CHECK(rows[6].description == "generic");
  CHECK(rows[6].status == aniso);
}

TEST_CASE("dimension-8 classification covers the table") {
  CHECK(classify_qform(qf(8, 0, hyp)).J == JTuple{0, 0});
  CHECK(classify_qform(qf(8, 1, iso)).J == JTuple{1, 0});
  CHECK(classify_qform(qf(8, 2, iso)).J == JTuple{2, 0});
  CHECK(classify_qform(qf(8, 0, aniso)).J == JTuple{0, 1});
  CHECK(classify_qform(qf(8, 1, aniso)).J == JTuple{1, 1});
  CHECK(classify_qform(qf(8, 2, aniso)).J == JTuple{2, 1});
  CHECK(classify_qform(qf(8, 3, aniso)).J == JTuple{2, 1});
  CHECK(classify_qform(qf(8, 3, aniso)).description == "generic");
  CHECK(classify_qform(qf(8, 2, aniso)).description ==
        "Pf_2 perp Pf_2 or transfer");
  // j_1 = min(ii_S, 2), j_2 = 1 exactly for anisotropic forms
  for (const auto& row : dim8_table()) {
    CHECK(row.J[0] == std::min(row.ii_S, 2));
    CHECK(row.J[1] == (row.status == aniso ? 1 : 0));
  }
  // rejected combinations
  CHECK_THROWS_AS(classify_qform(qf(8, 0, iso)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(8, 3, iso)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(8, 1, hyp)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(8, 4, aniso)), std::domain_error);
}

TEST_CASE("dimension-8 pattern cross-check") {
  auto q = qf(8, 1, aniso);
  q.splitting_pattern = std::vector<int>{0, 2, 4};
  CHECK(classify_qform(q).J == JTuple{1, 1});
  q.splitting_pattern = std::vector<int>{2, 4};
  CHECK_THROWS_AS(classify_qform(q), std::domain_error);
}

TEST_CASE("dimension-8 lookups are inverse to each other") {
  std::set<std::vector<int>> patterns;
  for (const auto& row : dim8_table()) patterns.insert(row.pattern);
  CHECK(patterns.size() == 6); // the duplicate J rows share their pattern
  for (const auto& pattern : patterns) {
    CHECK(dim8_pattern_from_J(dim8_J_from_pattern(pattern)) == pattern);
  }
  CHECK(dim8_J_from_pattern({0, 4}) == JTuple{0, 1});
  CHECK(dim8_pattern_from_J({2, 1}) == std::vector<int>{0, 1, 2, 4});
  CHECK_THROWS_AS(dim8_J_from_pattern({9}), std::domain_error);
  CHECK_THROWS_AS(dim8_pattern_from_J({9, 9}), std::domain_error);
}

TEST_CASE("dimension 4") {
  CHECK(classify_qform(qf(4, 0, hyp)).J == JTuple{0});
  CHECK(classify_qform(qf(4, 1, aniso)).J == JTuple{1});
  CHECK_THROWS_AS(classify_qform(qf(4, 0, iso)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(4, 0, aniso)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(4, 1, hyp)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(4, 2, aniso)), std::domain_error);
}

TEST_CASE("dimension 6") {
  CHECK(classify_qform(qf(6, 0, hyp)).J == JTuple{0});
  CHECK(classify_qform(qf(6, 1, iso)).J == JTuple{1});
  CHECK(classify_qform(qf(6, 2, aniso)).J == JTuple{2});
  CHECK_THROWS_AS(classify_qform(qf(6, 1, aniso)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(6, 2, iso)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(6, 0, iso)), std::domain_error);
}

TEST_CASE("dimension 10 documented patterns") {
  auto q = qf(10, 2, aniso);
  q.splitting_pattern = std::vector<int>{0, 2, 3, 5};
  const auto row = classify_qform(q);
  CHECK(row.J == JTuple{2, 0});
  CHECK(row.description == "Pfister neighbor");

  auto q2 = qf(10, 2, iso);
  q2.splitting_pattern = std::vector<int>{2, 3, 5};
  const auto row2 = classify_qform(q2);
  CHECK(row2.J == JTuple{2, 0});
  CHECK(row2.description == "Al_6 perp 2H");

  // wrong status or ii_S for a documented pattern
  auto bad = qf(10, 2, iso);
  bad.splitting_pattern = std::vector<int>{0, 2, 3, 5};
  CHECK_THROWS_AS(classify_qform(bad), std::domain_error);
  auto bad2 = qf(10, 1, aniso);
  bad2.splitting_pattern = std::vector<int>{0, 2, 3, 5};
  CHECK_THROWS_AS(classify_qform(bad2), std::domain_error);
  // undocumented pattern or missing pattern
  auto undoc = qf(10, 2, aniso);
  undoc.splitting_pattern = std::vector<int>{0, 1, 3, 5};
  CHECK_THROWS_AS(classify_qform(undoc), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(10, 2, aniso)), std::domain_error);
}

TEST_CASE("out-of-scope dimensions and inputs") {
  CHECK_THROWS_AS(classify_qform(qf(12, 0, hyp)), std::domain_error);
  CHECK_THROWS_AS(classify_qform(qf(3, 0, hyp)), std::invalid_argument);
  CHECK_THROWS_AS(classify_qform(qf(2, 0, hyp)), std::invalid_argument);
  auto q = qf(4, 1, aniso);
  q.splitting_pattern = std::vector<int>{2};
  CHECK_THROWS_AS(classify_qform(q), std::domain_error);
  auto q6 = qf(6, 2, aniso);
  q6.splitting_pattern = std::vector<int>{1, 3};
  CHECK_THROWS_AS(classify_qform(q6), std::domain_error);
}

TEST_CASE("degree-4 involutions") {
  CHECK(classify_involution(inv(4, 0, 0, 0, hyp)).J == JTuple{0, 0});
  CHECK(classify_involution(inv(4, 1, 1, 0, hyp)).J == JTuple{1, 0});
  CHECK(classify_involution(inv(4, 0, 1, 1, aniso)).J == JTuple{0, 1});
  CHECK(classify_involution(inv(4, 1, 1, 2, aniso)).J == JTuple{1, 1});
  // isotropic implies hyperbolic in degree 4
  CHECK_THROWS_AS(classify_involution(inv(4, 1, 1, 2, iso)), std::domain_error);
  // status must match the split-component criterion
  CHECK_THROWS_AS(classify_involution(inv(4, 1, 1, 0, aniso)), std::domain_error);
  CHECK_THROWS_AS(classify_involution(inv(4, 0, 1, 1, hyp)), std::domain_error);
  // triangle violation
  CHECK_THROWS_AS(classify_involution(inv(4, 2, 1, 0, hyp)), std::domain_error);
}

TEST_CASE("degree-6 involutions") {
  CHECK(classify_involution(inv(6, 0, 0, 0, hyp)).J == JTuple{0});
  CHECK(classify_involution(inv(6, 0, 1, 1, iso)).J == JTuple{1});
  CHECK(classify_involution(inv(6, 0, 2, 2, aniso)).J == JTuple{2});
  CHECK(classify_involution(inv(6, 1, 2, 2, aniso)).J == JTuple{2});
  // components must agree in degree 6
  CHECK_THROWS_AS(classify_involution(inv(6, 0, 1, 2, aniso)), std::domain_error);
  // small components force a split algebra
  CHECK_THROWS_AS(classify_involution(inv(6, 1, 1, 1, aniso)), std::domain_error);
  // a non-split algebra forces anisotropy
  CHECK_THROWS_AS(classify_involution(inv(6, 1, 2, 2, iso)), std::domain_error);
  CHECK_THROWS_AS(classify_involution(inv(6, 1, 2, 2, hyp)), std::domain_error);
  // split case follows the dimension-6 correspondence
  CHECK_THROWS_AS(classify_involution(inv(6, 0, 1, 1, aniso)), std::domain_error);
  CHECK_THROWS_AS(classify_involution(inv(6, 0, 3, 3, aniso)), std::domain_error);
  // degree dispatch
  CHECK_THROWS_AS(classify_involution(inv(8, 0, 0, 0, hyp)),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_involution(inv(5, 0, 0, 0, hyp)),
                  std::invalid_argument);
}

TEST_CASE("trialitarian anchor examples") {
  const auto r1 = classify_triple(inv(8, 1, 2, 2, aniso));
  REQUIRE(r1.rows.size() == 3);
  CHECK(r1.rows[0].J == JTuple{1, 2, 1});
  CHECK(r1.rows[1].J == JTuple{2, 1, 1});
  CHECK(r1.rows[2].J == JTuple{2, 1, 1});
  CHECK(r1.rows[0].slot == Slot::A);
  CHECK(r1.rows[1].slot == Slot::B);
  CHECK(r1.rows[2].slot == Slot::C);

  const auto r2 = classify_triple(inv(8, 1, 1, 2, aniso));
  CHECK(r2.rows[0].J == JTuple{1, 1, 1});
  CHECK(r2.rows[1].J == JTuple{1, 1, 1});
  CHECK(r2.rows[2].J == JTuple{1, 1, 1});

  const auto r3 = classify_triple(inv(8, 1, 1, 1, iso, Slot::A));
  CHECK(r3.rows[0].J == JTuple{1, 1, 0});
  CHECK(r3.rows[1].J == JTuple{1, 1, 0});
  CHECK(r3.rows[2].J == JTuple{1, 1, 0});
}

TEST_CASE("triple input validation") {
  CHECK_THROWS_AS(classify_triple(inv(8, 2, 1, 2, aniso)),
                  std::invalid_argument); // unsorted
  CHECK_THROWS_AS(classify_triple(inv(8, 0, 1, 2, aniso)),
                  std::domain_error); // triangle
  CHECK_THROWS_AS(classify_triple(inv(4, 0, 0, 0, hyp)),
                  std::invalid_argument); // wrong degree
  // division member forces anisotropy
  CHECK_THROWS_AS(classify_triple(inv(8, 3, 3, 3, iso)), std::domain_error);
  CHECK_THROWS_AS(classify_triple(inv(8, 1, 2, 3, hyp)), std::domain_error);
  // an isotropic triple with a large member contains a split member
  CHECK_THROWS_AS(classify_triple(inv(8, 1, 1, 2, iso)), std::domain_error);
  CHECK_THROWS_AS(classify_triple(inv(8, 1, 2, 2, hyp)), std::domain_error);
  // hyperbolicity needs a split component among the non-designated slots
  CHECK_THROWS_AS(classify_triple(inv(8, 0, 2, 2, hyp, Slot::A)),
                  std::domain_error);
  CHECK_NOTHROW(classify_triple(inv(8, 0, 2, 2, hyp, Slot::B)));
  // a split designated member of an isotropic non-hyperbolic involution
  // cannot have a split component
  CHECK_THROWS_AS(classify_triple(inv(8, 0, 0, 0, iso, Slot::A)),
                  std::domain_error);
  CHECK_NOTHROW(classify_triple(inv(8, 0, 0, 0, hyp, Slot::A)));
}

TEST_CASE("hyperbolic designated-B example splits correctly") {
  const auto r = classify_triple(inv(8, 0, 2, 2, hyp, Slot::B));
  CHECK(r.rows[0].J == JTuple{0, 2, 0});
  CHECK(r.rows[1].J == JTuple{2, 0, 0});
  CHECK(r.rows[2].J == JTuple{2, 0, 0});
  CHECK(r.designated == Slot::B);
}

TEST_CASE("exhaustive scan: emitted values are exactly the occurring set") {
  const auto& excluded = excluded_values();
  std::set<JTuple> emitted;
  int valid_inputs = 0;
  for (int v1 = 0; v1 <= 3; ++v1) {
    for (int v2 = v1; v2 <= 3; ++v2) {
      for (int v3 = v2; v3 <= 3; ++v3) {
        for (auto status : {aniso, iso, hyp}) {
          for (auto slot : {Slot::A, Slot::B, Slot::C}) {
            TripleResult res;
            try {
              res = classify_triple(inv(8, v1, v2, v3, status, slot));
            } catch (const std::domain_error&) {
              continue;
            }
            ++valid_inputs;
            for (const auto& row : res.rows) {
              CHECK(std::find(excluded.begin(), excluded.end(), row.J) ==
                    excluded.end());
              CHECK(occurs(row.J));
              emitted.insert(row.J);
            }
          }
        }
      }
    }
  }
  CHECK(valid_inputs > 0);
  // every admissible non-excluded tuple is realized by some profile
  const auto sig = kac_signature(GroupLabel::PGO, 4);
  int occurring = 0;
  for (const auto& J : admissible_tuples(sig)) {
    const bool is_excluded =
        std::find(excluded.begin(), excluded.end(), J) != excluded.end();
    CHECK(occurs(J) == !is_excluded);
    if (!is_excluded) {
      ++occurring;
      CHECK(emitted.count(J) == 1);
    }
  }
  CHECK(occurring == 15);
  CHECK(emitted.size() == 15);
}

TEST_CASE("classification values sit inside the index bounds") {
  const RootSystem d4(Family::D, 4);
  const auto pgo8 = kac_signature(GroupLabel::PGO, 4);
  for (int v1 = 0; v1 <= 3; ++v1) {
    for (int v2 = v1; v2 <= 3; ++v2) {
      for (int v3 = v2; v3 <= 3; ++v3) {
        if (v3 > v1 + v2) continue;
        const auto res = classify_triple(inv(8, v1, v2, v3, aniso));
        // slot A owns the sorted valuations (v1, v2, v3) literally
        const auto bounds =
            degree_one_bounds(make_index_profile(d4, v1, v2, v3), pgo8);
        const auto& J = res.rows[0].J;
        CHECK(J[0] >= bounds.intervals[0].lo);
        CHECK(J[0] <= bounds.intervals[0].hi);
        CHECK(J[1] >= bounds.intervals[1].lo);
        CHECK(J[1] <= bounds.intervals[1].hi);
      }
    }
  }
  // quadratic-form side: dimension 8 rows against SO_8 intervals
  const RootSystem d4b(Family::D, 4);
  const auto so8 = kac_signature(GroupLabel::SO, 8);
  for (const auto& row : dim8_table()) {
    const auto bounds = degree_one_bounds(
        make_index_profile(d4b, 0, row.ii_S, row.ii_S), so8);
    CHECK(row.J[0] >= bounds.intervals[0].lo);
    CHECK(row.J[0] <= bounds.intervals[0].hi);
  }
}

TEST_CASE("excluded values and occurrence") {
  const auto& ex = excluded_values();
  REQUIRE(ex.size() == 3);
  CHECK(ex[0] == JTuple{1, 2, 0});
  CHECK(ex[1] == JTuple{2, 1, 0});
  CHECK(ex[2] == JTuple{2, 2, 0});
  for (const auto& J : ex) CHECK_FALSE(occurs(J));
  CHECK(occurs({0, 0, 0}));
  CHECK(occurs({2, 2, 1}));
  CHECK_FALSE(occurs({3, 0, 0})); // beyond the caps
  CHECK_FALSE(occurs({0, 0}));    // wrong length
}

TEST_CASE("generic Pfister-shape test") {
  const auto pgo8 = kac_signature(GroupLabel::PGO, 4);
  // s = 3 constrains position 2 only
  CHECK(is_pattern_Is({1, 0, 1}, pgo8, 3));
  CHECK_FALSE(is_pattern_Is({1, 1, 0}, pgo8, 3));
  CHECK(is_pattern_Is({0, 0, 0}, pgo8, 3));
  // 2^(s-2) must fit inside r
  CHECK_THROWS_AS(is_pattern_Is({0, 0, 0}, pgo8, 4), std::invalid_argument);
  CHECK_THROWS_AS(is_pattern_Is({0, 0, 0}, pgo8, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_pattern_Is({0, 0}, pgo8, 3), std::invalid_argument);
  CHECK_THROWS_AS(is_pattern_Is({0, 0}, kac_signature(GroupLabel::SO, 8), 3),
                  std::invalid_argument);
  // a wider signature: PGO_16 has r = 5, allowing s = 4
  const auto pgo16 = kac_signature(GroupLabel::PGO, 8);
  REQUIRE(pgo16.r == 5);
  CHECK(is_pattern_Is({1, 0, 0, 0, 1}, pgo16, 4));
  CHECK_FALSE(is_pattern_Is({1, 0, 0, 1, 1}, pgo16, 4));
}

TEST_CASE("witt consistency compares zero-deleted sequences") {
  CHECK(witt_consistency({1}, {1, 0}));
  CHECK(witt_consistency({0, 1, 2}, {1, 0, 2}));
  CHECK(witt_consistency({}, {0, 0}));
  CHECK_FALSE(witt_consistency({2, 1}, {1, 2}));
  CHECK_FALSE(witt_consistency({1}, {1, 1}));
}

TEST_CASE("isotropy status names") {
  CHECK(to_string(aniso) == "anisotropic");
  CHECK(to_string(iso) == "isotropic non-hyperbolic");
  CHECK(to_string(hyp) == "hyperbolic");
  CHECK(to_string(Slot::A) == "A");
  CHECK(to_string(Slot::C) == "C");
}
