#include <gtest/gtest.h>

#include <cmath>

#include "ftspan/core.hpp"
#include "ftspan/rng.hpp"

namespace {

using namespace ftspan;

std::vector<WeightedPoint> make_points(std::initializer_list<std::pair<std::vector<double>, double>> init) {
  std::vector<WeightedPoint> pts;
  int id = 0;
  for (const auto& [coords, w] : init) pts.push_back({id++, coords, w});
  return pts;
}

TEST(AdditiveDistance, ZeroForSamePoint) {
  auto pts = make_points({{{0.0, 0.0}, 1.0}, {{3.0, 4.0}, 2.0}});
  EuclideanMetric m(pts);
  EXPECT_EQ(additive_distance(pts, 0, 0, m), 0.0);
  EXPECT_EQ(additive_distance(pts, 1, 1, m), 0.0);
}

TEST(AdditiveDistance, ThreeFourFiveTriangle) {
  auto pts = make_points({{{0.0, 0.0}, 1.0}, {{3.0, 4.0}, 2.0}});
  EuclideanMetric m(pts);
  EXPECT_DOUBLE_EQ(additive_distance(pts, 0, 1, m), 8.0);
  EXPECT_DOUBLE_EQ(additive_distance(pts, 1, 0, m), 8.0);
}

TEST(AdditiveDistance, ZeroWeightsReduceToBaseDistance) {
  auto pts = make_points({{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 0.0}});
  EuclideanMetric m(pts);
  EXPECT_DOUBLE_EQ(additive_distance(pts, 0, 1, m), 1.0);
}

TEST(AdditiveDistance, OutOfRangeIdThrows) {
  auto pts = make_points({{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 0.0}});
  EuclideanMetric m(pts);
  WeightedPoint bogus{7, {0.0, 0.0}, 0.0};
  EXPECT_THROW(additive_distance(pts[0], bogus, m), std::invalid_argument);
}

TEST(MetricAudit, CollinearUnweightedHasZeroSlack) {
  auto pts = make_points({{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 0.0}, {{2.0, 0.0}, 0.0}});
  EuclideanMetric m(pts);
  auto res = audit_metric_axioms(pts, m, 100);
  EXPECT_TRUE(res.ok);
  EXPECT_DOUBLE_EQ(res.worst_slack, 0.0);
}

TEST(MetricAudit, RandomWeightedEuclideanIsMetric) {
  Rng rng(42);
  std::vector<WeightedPoint> pts;
  for (int i = 0; i < 30; ++i)
    pts.push_back({i, {rng.uniform(0, 10), rng.uniform(0, 10)}, rng.uniform(0, 5)});
  EuclideanMetric m(pts);
  auto res = audit_metric_axioms(pts, m, 0);  // exhaustive at n <= 30
  EXPECT_TRUE(res.ok);
  EXPECT_LE(res.worst_slack, 1e-9);
}

TEST(MetricAudit, DegenerateSmallSetIsVacuouslyTrue) {
  auto pts = make_points({{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 0.0}});
  EuclideanMetric m(pts);
  EXPECT_TRUE(audit_metric_axioms(pts, m, 10).ok);
}

// Oracle corrupted for one pair must be caught with a witness.
class CorruptedMetric final : public MetricOracle {
 public:
  CorruptedMetric(const EuclideanMetric& base, int a, int b) : base_(base), a_(a), b_(b) {}
  int size() const override { return base_.size(); }
  double base_distance(int a, int b) const override {
    const double d = base_.base_distance(a, b);
    if ((a == a_ && b == b_) || (a == b_ && b == a_)) return d / 2.0;
    return d;
  }

 private:
  const EuclideanMetric& base_;
  int a_, b_;
};

TEST(MetricAudit, CorruptedOracleFailsWithWitness) {
  auto pts = make_points({{{0.0, 0.0}, 0.0}, {{4.0, 0.0}, 0.0}, {{8.0, 0.0}, 0.0}});
  EuclideanMetric base(pts);
  CorruptedMetric bad(base, 0, 2);  // reports 4 instead of 8
  auto res = audit_metric_axioms(pts, bad, 100);
  EXPECT_FALSE(res.ok);
  EXPECT_GT(res.worst_slack, 1.0);
  EXPECT_GE(res.witness[0], 0);
}

TEST(SegmentMetricTest, MeasuresAlongChord) {
  SegmentMetric m({0.0, 2.5, 7.0});
  EXPECT_DOUBLE_EQ(m.base_distance(0, 2), 7.0);
  EXPECT_DOUBLE_EQ(m.base_distance(2, 1), 4.5);
  EXPECT_DOUBLE_EQ(m.base_distance(1, 1), 0.0);
}

TEST(SpannerGraph, RejectsSelfLoopsAndDeduplicates) {
  Spanner g(4);
  EXPECT_THROW(g.add_edge(1, 1, 0.0), std::invalid_argument);
  EXPECT_TRUE(g.add_edge(0, 1, 2.0));
  EXPECT_FALSE(g.add_edge(1, 0, 3.0));  // duplicate keeps the first
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].length, 2.0);
}

TEST(SpannerGraph, NeighborsMatchEdgeList) {
  Spanner g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(2, 1, 1.0);
  EXPECT_EQ(g.neighbors(1), (std::vector<int>{0, 2}));
  EXPECT_EQ(g.neighbors(0), (std::vector<int>{1}));
  EXPECT_THROW(g.neighbors(5), std::invalid_argument);
}

TEST(EdgeTagTest, RoundTripsThroughStrings) {
  EdgeTag lifted{EdgeKind::kLifted, 3};
  EXPECT_EQ(lifted.str(), "lifted:3");
  EXPECT_EQ(EdgeTag::parse("lifted:3").level, 3);
  EXPECT_EQ(EdgeTag::parse("intra-cluster").kind, EdgeKind::kIntraCluster);
  EXPECT_THROW(EdgeTag::parse("bogus"), std::invalid_argument);
}

}  // namespace
