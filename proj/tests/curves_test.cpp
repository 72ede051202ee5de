#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "kroc/curves.hpp"
#include "kroc/errors.hpp"
#include "support/oracles.hpp"

namespace kroc {
namespace {

using testing::from_sorted_labels;
using testing::kWorkedExample;
using testing::Rational;

LabeledSample make(std::initializer_list<std::pair<double, int>> rows) {
  LabeledSample s;
  for (auto [score, label] : rows) s.entries.push_back({score, label ? Label::target : Label::complement});
  return s;
}

TEST(TallyClasses, WorkedExample) {
  const auto counts = tally_classes(from_sorted_labels(kWorkedExample));
  EXPECT_EQ(counts.n, 9u);
  EXPECT_EQ(counts.n_target, 3u);
  EXPECT_EQ(counts.n_complement, 6u);
}

TEST(TallyClasses, SmallestLegalSample) {
  const auto counts = tally_classes(make({{0.3, 1}, {0.1, 0}}));
  EXPECT_EQ(counts, (ClassCounts{2, 1, 1}));
}

TEST(TallyClasses, Errors) {
  EXPECT_THROW(tally_classes(make({{0.3, 1}, {0.2, 1}, {0.1, 1}})), SingleClassSample);
  EXPECT_THROW(tally_classes(make({{0.3, 0}, {0.2, 0}})), SingleClassSample);
  EXPECT_THROW(tally_classes(make({{0.3, 1}})), EmptySample);
  EXPECT_THROW(tally_classes(LabeledSample{}), EmptySample);
  EXPECT_THROW(tally_classes(make({{0.3, 1}, {std::nan(""), 0}})), NonFiniteScore);
  EXPECT_THROW(tally_classes(make({{std::numeric_limits<double>::infinity(), 1}, {0.1, 0}})),
               NonFiniteScore);
}

TEST(TallyClasses, SingleClassMessageCarriesCounts) {
  try {
    tally_classes(make({{0.3, 1}, {0.2, 1}}));
    FAIL() << "expected SingleClassSample";
  } catch (const SingleClassSample& e) {
    EXPECT_EQ(e.n_target(), 2u);
    EXPECT_EQ(e.n_complement(), 0u);
    EXPECT_NE(std::string(e.what()).find("n_target=2"), std::string::npos);
  }
}

TEST(RankAndGroup, DistinctScoresGiveSingletons) {
  LabeledSample s;
  for (int i = 0; i < 9; ++i) {
    s.entries.push_back({0.9 - 0.1 * i, kWorkedExample[i] ? Label::target : Label::complement});
  }
  // Shuffle input order; grouping must not depend on it.
  std::mt19937_64 rng(3);
  std::shuffle(s.entries.begin(), s.entries.end(), rng);

  const auto groups = rank_and_group(s);
  ASSERT_EQ(groups.size(), 9u);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EXPECT_EQ(groups[i].count_target + groups[i].count_complement, 1u);
    EXPECT_EQ(groups[i].count_target, static_cast<std::size_t>(kWorkedExample[i]));
    EXPECT_EQ(groups[i].rank(), i + 1);
    if (i > 0) {
      EXPECT_LT(groups[i].score, groups[i - 1].score);
    }
  }
  EXPECT_EQ(groups.back().cum_target, 3u);
  EXPECT_EQ(groups.back().cum_complement, 6u);
}

TEST(RankAndGroup, AllTied) {
  const auto groups = rank_and_group(make({{0.4, 1}, {0.4, 0}, {0.4, 0}, {0.4, 1}}));
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].cum_target, 2u);
  EXPECT_EQ(groups[0].cum_complement, 2u);
}

TEST(RankAndGroup, HandCounted) {
  const auto groups = rank_and_group(make({{0.2, 0}, {0.5, 1}, {0.5, 0}}));
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].score, 0.5);
  EXPECT_EQ(groups[0].count_target, 1u);
  EXPECT_EQ(groups[0].count_complement, 1u);
  EXPECT_EQ(groups[0].cum_target, 1u);
  EXPECT_EQ(groups[0].cum_complement, 1u);
  EXPECT_EQ(groups[1].cum_target, 1u);
  EXPECT_EQ(groups[1].cum_complement, 2u);
}

TEST(RankAndGroup, RejectsNonFinite) {
  EXPECT_THROW(rank_and_group(make({{0.1, 1}, {std::nan(""), 0}})), NonFiniteScore);
}

TEST(BuildRoc, WorkedExample) {
  const RocCurve roc = build_roc(from_sorted_labels(kWorkedExample));
  const std::vector<std::pair<Rational, Rational>> expected{
      {{0}, {0}},       {{0}, {1, 3}},    {{1, 6}, {1, 3}}, {{1, 3}, {1, 3}}, {{1, 3}, {2, 3}},
      {{1, 2}, {2, 3}}, {{1, 2}, {1}},    {{2, 3}, {1}},    {{5, 6}, {1}},    {{1}, {1}}};
  ASSERT_EQ(roc.vertices.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(roc.vertices[i].u, expected[i].first.to_double()) << "vertex " << i;
    EXPECT_EQ(roc.vertices[i].v, expected[i].second.to_double()) << "vertex " << i;
    EXPECT_EQ(roc.vertices[i].rank, i);
  }
}

TEST(BuildRoc, IdealClassifier) {
  const RocCurve roc = build_roc(from_sorted_labels({1, 0, 0, 0}));
  const std::vector<std::pair<double, double>> expected{
      {0, 0}, {0, 1}, {1.0 / 3, 1}, {2.0 / 3, 1}, {1, 1}};
  ASSERT_EQ(roc.vertices.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(roc.vertices[i].u, expected[i].first);
    EXPECT_EQ(roc.vertices[i].v, expected[i].second);
  }
}

TEST(BuildRoc, SingleTieGroupIsChanceDiagonal) {
  const RocCurve roc = build_roc(make({{1.0, 1}, {1.0, 0}, {1.0, 0}}));
  ASSERT_EQ(roc.vertices.size(), 2u);
  EXPECT_EQ(roc.vertices[0].u, 0.0);
  EXPECT_EQ(roc.vertices[0].v, 0.0);
  EXPECT_EQ(roc.vertices[1].u, 1.0);
  EXPECT_EQ(roc.vertices[1].v, 1.0);
}

TEST(BuildKs, WorkedExample) {
  const KsCurve ks = build_ks(from_sorted_labels(kWorkedExample));
  const std::vector<Rational> expected_y{{1, 3}, {1, 6}, {0}, {1, 3}, {1, 6},
                                         {1, 2}, {1, 3}, {1, 6}, {0}};
  ASSERT_EQ(ks.vertices.size(), 10u);
  EXPECT_EQ(ks.vertices[0].x, 0.0);
  EXPECT_EQ(ks.vertices[0].y, 0.0);
  for (std::size_t i = 1; i < ks.vertices.size(); ++i) {
    EXPECT_EQ(ks.vertices[i].x, Rational(static_cast<std::int64_t>(i), 9).to_double());
    EXPECT_NEAR(ks.vertices[i].y, expected_y[i - 1].to_double(), 1e-15) << "rank " << i;
  }
  EXPECT_EQ(ks.vertices[6].y, 0.5);
  EXPECT_EQ(ks.vertices.back().y, 0.0);
}

TEST(BuildKs, IdealTriangle) {
  for (auto [n, nt] : {std::pair{9, 3}, std::pair{4, 1}, std::pair{7, 6}}) {
    std::vector<int> labels(n, 0);
    std::fill_n(labels.begin(), nt, 1);
    const KsCurve ks = build_ks(from_sorted_labels(labels));
    const auto& apex = ks.vertices[nt];
    EXPECT_DOUBLE_EQ(apex.x, static_cast<double>(nt) / n);
    EXPECT_EQ(apex.y, 1.0);
    EXPECT_EQ(ks.vertices.back().x, 1.0);
    EXPECT_EQ(ks.vertices.back().y, 0.0);
    // Every other vertex lies on one of the two triangle edges.
    for (const auto& v : ks.vertices) {
      const double edge = v.rank <= static_cast<std::size_t>(nt)
                              ? v.x * n / nt
                              : (1.0 - v.x) * n / (n - nt);
      EXPECT_NEAR(v.y, edge, 1e-12);
    }
  }
}

TEST(BuildKs, AlternatingReturnsToBaseline) {
  const std::vector<int> labels{1, 0, 1, 0, 1, 0, 1, 0};
  const KsCurve ks = build_ks(from_sorted_labels(labels));
  double peak = 0.0;
  for (const auto& v : ks.vertices) {
    if (v.rank % 2 == 0) EXPECT_EQ(v.y, 0.0) << "rank " << v.rank;
    peak = std::max(peak, v.y);
  }
  EXPECT_EQ(peak, 1.0 / 4);
}

TEST(BuildCurves, PropagateErrors) {
  EXPECT_THROW(build_roc(make({{0.1, 1}, {0.2, 1}})), SingleClassSample);
  EXPECT_THROW(build_ks(make({{0.1, 1}})), EmptySample);
}

// Randomized properties over samples with and without heavy ties.
class CurveProperties : public ::testing::TestWithParam<bool> {};

TEST_P(CurveProperties, MatchBruteForceAndCrossInvariants) {
  std::mt19937_64 rng(GetParam() ? 11 : 12);
  for (int trial = 0; trial < 150; ++trial) {
    const LabeledSample s = testing::random_sample(rng, 200, GetParam());
    const RocCurve roc = build_roc(s);
    const KsCurve ks = build_ks(s);
    const auto exact = testing::exact_vertices(s);
    const auto groups = rank_and_group(s);

    ASSERT_EQ(roc.vertices.size(), groups.size() + 1);
    ASSERT_EQ(ks.vertices.size(), exact.size());
    const double n = static_cast<double>(s.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const auto& r = roc.vertices[i];
      const auto& k = ks.vertices[i];
      ASSERT_EQ(r.rank, exact[i].rank);
      ASSERT_EQ(k.rank, r.rank);
      EXPECT_EQ(r.u, exact[i].u.to_double());
      EXPECT_EQ(r.v, exact[i].v.to_double());
      EXPECT_EQ(k.x, exact[i].x.to_double());
      // Bitwise: both sides use the same floating-point expression.
      EXPECT_EQ(k.y, r.v - r.u);
      EXPECT_NEAR(k.y, exact[i].y.to_double(), 4e-16);
      EXPECT_NEAR(k.x, (ks.counts.n_target * r.v + ks.counts.n_complement * r.u) / n, 1e-15);
      if (i > 0) {
        EXPECT_LT(ks.vertices[i - 1].x, k.x);
        EXPECT_LE(roc.vertices[i - 1].u, r.u);
        EXPECT_LE(roc.vertices[i - 1].v, r.v);
      }
    }
    EXPECT_EQ(roc.vertices.back().u, 1.0);
    EXPECT_EQ(roc.vertices.back().v, 1.0);
    EXPECT_EQ(ks.vertices.back().x, 1.0);
    EXPECT_EQ(ks.vertices.back().y, 0.0);
  }
}

TEST_P(CurveProperties, MirrorUnderScoreNegationAndRelabel) {
  std::mt19937_64 rng(GetParam() ? 21 : 22);
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledSample s = testing::random_sample(rng, 300, GetParam());
    LabeledSample mirrored;
    for (const auto& e : s.entries) {
      mirrored.entries.push_back(
          {-e.score, e.label == Label::target ? Label::complement : Label::target});
    }
    const KsCurve ks = build_ks(s);
    const KsCurve mk = build_ks(mirrored);
    ASSERT_EQ(ks.vertices.size(), mk.vertices.size());
    const std::size_t m = ks.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& a = ks.vertices[i];
      const auto& b = mk.vertices[m - 1 - i];
      EXPECT_EQ(a.rank + b.rank, s.size());
      EXPECT_EQ(ks_ordinate_key(a.targets, a.complements, ks.counts),
                ks_ordinate_key(b.targets, b.complements, mk.counts));
      EXPECT_NEAR(b.x, 1.0 - a.x, 1e-15);
      EXPECT_NEAR(b.y, a.y, 1e-15);
    }
  }
}

TEST_P(CurveProperties, InvariantUnderIncreasingScoreMaps) {
  std::mt19937_64 rng(GetParam() ? 31 : 32);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledSample s = testing::random_sample(rng, 300, GetParam());
    // Integer scores keep the cubic map exact and strictly increasing.
    for (auto& e : s.entries) e.score = std::round(e.score * 16.0);
    LabeledSample mapped = s;
    for (auto& e : mapped.entries) e.score = e.score * e.score * e.score + 5.0 * e.score - 2.0;

    const KsCurve a = build_ks(s);
    const KsCurve b = build_ks(mapped);
    ASSERT_EQ(a.vertices.size(), b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
      EXPECT_EQ(a.vertices[i].x, b.vertices[i].x);
      EXPECT_EQ(a.vertices[i].y, b.vertices[i].y);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Ties, CurveProperties, ::testing::Bool(),
                         [](const auto& info) { return info.param ? "WithTies" : "Distinct"; });

}  // namespace
}  // namespace kroc
