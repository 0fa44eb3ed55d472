#include <gtest/gtest.h>

#include <set>

#include "ftspan/cluster_spanner.hpp"
#include "ftspan/rng.hpp"
#include "ftspan/verifier.hpp"

namespace {

using namespace ftspan;

std::vector<WeightedPoint> random_weighted(int n, std::uint64_t seed, double wmax) {
  Rng rng(seed);
  std::vector<WeightedPoint> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back({i, {rng.uniform01(), rng.uniform01()}, rng.uniform(0.0, wmax)});
  return pts;
}

TEST(ClusterPoints, ZeroWeightsMakeEveryPointACenter) {
  auto pts = random_weighted(12, 9, 0.0);
  auto cl = cluster_points(pts, 1, 1.0);
  EXPECT_EQ(cl.clusters.size(), pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) EXPECT_TRUE(cl.is_center(i));
}

TEST(ClusterPoints, AdmissionRuleExample) {
  std::vector<WeightedPoint> pts = {
      {0, {0.0, 0.0}, 0.0}, {1, {10.0, 0.0}, 0.0}, {2, {0.5, 0.0}, 100.0}};
  auto cl = cluster_points(pts, 1, 0.5);
  EXPECT_EQ(cl.clusters.size(), 2u);
  EXPECT_EQ(cl.assignment[2], cl.assignment[0]);  // |pc| = 0.5 <= 50
  EXPECT_EQ(cl.clusters[cl.assignment[2]].center, 0);
}

TEST(ClusterPoints, InvalidEpsilonThrows) {
  auto pts = random_weighted(5, 1, 1.0);
  EXPECT_THROW(cluster_points(pts, 1, 0.0), std::invalid_argument);
  EXPECT_THROW(cluster_points(pts, 1, -1.0), std::invalid_argument);
  EXPECT_THROW(cluster_points(pts, 1, 1.5), std::invalid_argument);
}

// Independent straight-line re-simulation of the insertion loop.
std::vector<int> resimulate_assignment(const std::vector<WeightedPoint>& pts, int k, double eps) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pts[a].weight < pts[b].weight; });
  std::vector<int> centers;
  std::vector<int> assign(pts.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int pid = order[i];
    if (static_cast<int>(i) < std::min<int>(k + 1, pts.size())) {
      assign[pid] = static_cast<int>(centers.size());
      centers.push_back(pid);
      continue;
    }
    int best = -1;
    double best_d = 0;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const double d = euclidean(pts[pid].coords, pts[centers[c]].coords);
      if (best < 0 || d < best_d) { best = static_cast<int>(c); best_d = d; }
    }
    if (best_d <= eps * pts[pid].weight) {
      assign[pid] = best;
    } else {
      assign[pid] = static_cast<int>(centers.size());
      centers.push_back(pid);
    }
  }
  return assign;
}

TEST(ClusterPoints, MatchesIndependentResimulation) {
  auto pts = random_weighted(20, 77, 10.0);
  auto cl = cluster_points(pts, 1, 0.5);
  EXPECT_EQ(cl.assignment, resimulate_assignment(pts, 1, 0.5));
}

TEST(ClusterPoints, StructuralInvariants) {
  auto pts = random_weighted(40, 5150, 6.0);
  for (int k : {1, 2}) {
    auto cl = cluster_points(pts, k, 0.5);
    std::set<int> seen;
    std::set<std::pair<double, double>> center_positions;
    for (const auto& c : cl.clusters) {
      EXPECT_EQ(c.members.front(), c.center);
      for (int m : c.members) {
        EXPECT_TRUE(seen.insert(m).second);  // exactly one cluster per point
        EXPECT_GE(pts[m].weight, pts[c.center].weight);
        if (m != c.center)
          EXPECT_LE(euclidean(pts[m].coords, pts[c.center].coords),
                    0.5 * pts[m].weight + 1e-12);
      }
      center_positions.insert({pts[c.center].coords[0], pts[c.center].coords[1]});
    }
    EXPECT_EQ(seen.size(), pts.size());
    EXPECT_EQ(center_positions.size(), cl.clusters.size());  // pairwise distinct
  }
}

TEST(StretchBudget, MatchesClosedForm) {
  EXPECT_DOUBLE_EQ(euclidean_stretch_bound(1.0), 9.0);
  EXPECT_DOUBLE_EQ(euclidean_stretch_bound(0.5), 6.25);
  EXPECT_NEAR(euclidean_stretch_bound(0.1), 4.41, 1e-12);
  EXPECT_LE(euclidean_stretch_bound(0.1), 4.0 + 5.0 * 0.1);
  EXPECT_THROW(euclidean_stretch_bound(0.0), std::invalid_argument);
}

TEST(EuclideanSpanner, TwoPointsGiveDirectEdge) {
  std::vector<WeightedPoint> pts = {{0, {0.0, 0.0}, 3.0}, {1, {1.0, 2.0}, 5.0}};
  auto res = build_euclidean_spanner_full(pts, 1, 1.0);
  ASSERT_EQ(res.spanner.edges().size(), 1u);
  EXPECT_DOUBLE_EQ(res.spanner.edges()[0].length, 3.0 + std::sqrt(5.0) + 5.0);
  EuclideanMetric m(pts);
  EXPECT_TRUE(verify_stretch(pts, m, res.spanner, 1, euclidean_stretch_bound(1.0)).pass);
}

TEST(EuclideanSpanner, AllFarPointsReduceToCenterGraph) {
  // k+2 points, mutually distant, heavy weights: every point is a center and
  // the output is the base spanner on all of them.
  std::vector<WeightedPoint> pts = {
      {0, {0.0, 0.0}, 50.0}, {1, {100.0, 0.0}, 60.0}, {2, {0.0, 100.0}, 70.0}};
  auto res = build_euclidean_spanner_full(pts, 1, 0.5);
  EXPECT_EQ(res.clustering.clusters.size(), 3u);
  std::set<std::pair<int, int>> got, base;
  for (const auto& e : res.spanner.edges()) got.insert({e.u, e.v});
  auto cone = build_cone_spanner({{0.0, 0.0}, {100.0, 0.0}, {0.0, 100.0}}, 1, 2.5);
  for (const auto& e : cone.edges()) base.insert({e.u, e.v});
  EXPECT_EQ(got, base);
}

TEST(EuclideanSpanner, EdgeLengthsAreAdditiveDistances) {
  auto pts = random_weighted(25, 31, 5.0);
  auto g = build_euclidean_spanner(pts, 1, 0.5);
  EuclideanMetric m(pts);
  for (const auto& e : g.edges())
    EXPECT_NEAR(e.length, additive_distance(pts, e.u, e.v, m), 1e-9 * e.length);
}

TEST(EuclideanSpanner, ExhaustiveSingleFaultStretch) {
  auto pts = random_weighted(20, 1234, 5.0);
  BuildAudit audit;
  EuclideanBuildOptions opt;
  opt.audit = &audit;
  auto res = build_euclidean_spanner_full(pts, 1, 0.5, opt);
  EuclideanMetric m(pts);
  VerifyOptions vopt;
  vopt.classifier = make_case_classifier(res.clustering);
  auto rep = verify_stretch(pts, m, res.spanner, 1, euclidean_stretch_bound(0.5), vopt);
  EXPECT_TRUE(rep.pass) << "worst " << rep.worst_stretch;
  ASSERT_EQ(audit.clusterings.size(), 1u);
  EXPECT_LE(audit.clusterings[0].worst_admission_slack, 1e-12);
  EXPECT_TRUE(audit.clusterings[0].center_min_weight_ok);
}

TEST(EuclideanSpanner, ExhaustiveTwoFaultStretch) {
  auto pts = random_weighted(16, 4321, 8.0);
  auto g = build_euclidean_spanner(pts, 2, 1.0);
  EuclideanMetric m(pts);
  auto rep = verify_stretch(pts, m, g, 2, euclidean_stretch_bound(1.0));
  EXPECT_TRUE(rep.pass) << "worst " << rep.worst_stretch;
}

TEST(EuclideanSpanner, HubEdgesCoverAllCenterNeighbors) {
  auto pts = random_weighted(30, 99, 6.0);
  auto res = build_euclidean_spanner_full(pts, 1, 0.5);
  for (const auto& [pid, plan] : res.plans) {
    const int center = res.clustering.clusters[res.clustering.assignment[pid]].center;
    EXPECT_EQ(plan.hub_set, res.center_graph.neighbors(center));
    for (int v : plan.hub_set)
      if (v != pid) EXPECT_TRUE(res.spanner.has_edge(pid, v));
    EXPECT_EQ(plan.low_set.size(),
              std::min<std::size_t>(2, res.clustering.clusters[res.clustering.assignment[pid]]
                                           .members.size()));
  }
}

TEST(CaseClassifier, CoversAllEightCases) {
  // Two clusters with members, plus fault sets hitting the centers, walk the
  // classifier through every structural case.
  std::vector<WeightedPoint> pts = {
      {0, {0.0, 0.0}, 0.0},   // center A (seed)
      {1, {50.0, 0.0}, 0.1},  // center B (seed)
      {2, {0.5, 0.0}, 10.0},  // member of A
      {3, {0.6, 0.0}, 10.0},  // member of A
      {4, {50.5, 0.0}, 10.0}, // member of B
  };
  auto cl = cluster_points(pts, 1, 0.5);
  ASSERT_EQ(cl.clusters.size(), 2u);
  auto classify = make_case_classifier(cl);
  EXPECT_EQ(classify(0, 1, {}), 1);
  EXPECT_EQ(classify(0, 2, {}), 2);
  EXPECT_EQ(classify(2, 3, {}), 3);
  EXPECT_EQ(classify(2, 3, {0}), 4);
  EXPECT_EQ(classify(2, 4, {}), 5);
  EXPECT_EQ(classify(0, 4, {}), 6);
  EXPECT_EQ(classify(0, 4, {1}), 7);
  EXPECT_EQ(classify(2, 4, {1}), 7);
  EXPECT_EQ(classify(2, 4, {0, 1}), 8);
}

TEST(ChordSpanner, GroupedFaultsAreCertified) {
  // Three sources, two chord points each; certification enumerates source
  // subsets, so surviving cross-source pairs meet the bound even when one
  // source removes two chord vertices at once.
  std::vector<ChordPoint> cpts = {
      {0.0, 1.0, 0}, {0.2, 1.1, 0}, {5.0, 0.5, 1}, {5.1, 0.6, 1}, {9.0, 2.0, 2}, {9.3, 2.1, 2}};
  auto res = build_chord_spanner(cpts, 1, 0.5, 4.0 + 5.0 * 0.5);
  EXPECT_EQ(res.certify_mode, "exhaustive");
  // Simulate the losses of each single source and check surviving pairs.
  for (int dead_owner = 0; dead_owner < 3; ++dead_owner) {
    std::vector<char> dead(cpts.size(), 0);
    for (std::size_t i = 0; i < cpts.size(); ++i)
      if (cpts[i].owner == dead_owner) dead[i] = 1;
    for (std::size_t s = 0; s < cpts.size(); ++s) {
      if (dead[s]) continue;
      auto dist = dijkstra_masked(res.graph, static_cast<int>(s), dead);
      for (std::size_t t = s + 1; t < cpts.size(); ++t) {
        if (dead[t] || cpts[t].owner == cpts[s].owner) continue;
        const double dw = cpts[s].weight + std::abs(cpts[s].t - cpts[t].t) + cpts[t].weight;
        EXPECT_LE(dist[t], 6.5 * dw * (1.0 + 1e-9));
      }
    }
  }
}

TEST(LiftEdges, CollapsesOwnersAndDropsSelfPairs) {
  Spanner chord(4);
  chord.add_edge(0, 1, 1.0);  // same owner -> dropped
  chord.add_edge(1, 2, 1.0);  // owners 7, 9
  chord.add_edge(0, 3, 1.0);  // owners 7, 9 -> duplicate of above
  auto lifted = lift_edges(chord, {7, 7, 9, 9});
  ASSERT_EQ(lifted.size(), 1u);
  EXPECT_EQ(lifted[0], std::make_pair(7, 9));
}

TEST(LiftEdges, LiftedCountNeverExceedsChordCount) {
  Rng rng(8);
  std::vector<ChordPoint> cpts;
  for (int i = 0; i < 30; ++i) cpts.push_back({rng.uniform(0, 10), rng.uniform(0, 2), i % 9});
  auto res = build_chord_spanner(cpts, 1, 0.5, 6.5);
  auto lifted = lift_edges(res.graph, res.owner);
  EXPECT_LE(lifted.size(), res.graph.edges().size());
}

}  // namespace
