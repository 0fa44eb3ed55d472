// Weighted points, the additive weighted distance, distance oracles, and the
// spanner graph container used by every construction and the verifier.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftspan/geometry.hpp"
#include "ftspan/rng.hpp"

namespace ftspan {

inline constexpr double kRelTol = 1e-9;

// A point with a non-negative additive weight (a per-node delay measured in
// the same length unit as the coordinates).
struct WeightedPoint {
  int id = 0;
  std::vector<double> coords;
  double weight = 0.0;

  Vec2 xy() const { return {coords[0], coords.size() > 1 ? coords[1] : 0.0}; }
};

inline void validate_points(const std::vector<WeightedPoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].id != static_cast<int>(i))
      throw std::invalid_argument("point ids must be contiguous 0..n-1");
    if (pts[i].weight < 0.0)
      throw std::invalid_argument("point weights must be non-negative");
    if (pts[i].coords.empty() || pts[i].coords.size() != pts[0].coords.size())
      throw std::invalid_argument("points must share a positive dimension");
  }
}

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Base-distance contract: zero diagonal, symmetric, triangle inequality up
// to 1e-9 relative. Geodesic oracles also expose the witnessing polyline.
class MetricOracle {
 public:
  virtual ~MetricOracle() = default;
  virtual int size() const = 0;
  virtual double base_distance(int a, int b) const = 0;
  virtual std::vector<Vec2> path(int a, int b) const { (void)a; (void)b; return {}; }

 protected:
  void check_ids(int a, int b) const {
    if (a < 0 || b < 0 || a >= size() || b >= size())
      throw std::invalid_argument("point id out of range for oracle");
  }
};

class EuclideanMetric final : public MetricOracle {
 public:
  explicit EuclideanMetric(std::vector<WeightedPoint> pts) : pts_(std::move(pts)) {}
  int size() const override { return static_cast<int>(pts_.size()); }
  double base_distance(int a, int b) const override {
    check_ids(a, b);
    return euclidean(pts_[a].coords, pts_[b].coords);
  }

 private:
  std::vector<WeightedPoint> pts_;
};

// Distances measured along a chord (one-dimensional positions). The chord is
// a straight segment inside the region, so these are geodesic.
class SegmentMetric final : public MetricOracle {
 public:
  explicit SegmentMetric(std::vector<double> positions) : pos_(std::move(positions)) {}
  int size() const override { return static_cast<int>(pos_.size()); }
  double base_distance(int a, int b) const override {
    check_ids(a, b);
    return std::abs(pos_[a] - pos_[b]);
  }

 private:
  std::vector<double> pos_;
};

// w(p) + d(p,q) + w(q) for distinct ids, zero when ids coincide.
inline double additive_distance(const WeightedPoint& p, const WeightedPoint& q,
                                const MetricOracle& oracle) {
  if (p.id == q.id) return 0.0;
  return p.weight + oracle.base_distance(p.id, q.id) + q.weight;
}

inline double additive_distance(const std::vector<WeightedPoint>& pts, int a, int b,
                                const MetricOracle& oracle) {
  return additive_distance(pts.at(a), pts.at(b), oracle);
}

struct MetricAuditResult {
  bool ok = true;
  double worst_slack = 0.0;  // max of d(p,q) - d(p,r) - d(r,q) and symmetry gaps
  std::array<int, 3> witness = {-1, -1, -1};
};

// Samples triples (exhaustive when n <= 30) and checks symmetry plus the
// triangle inequality of the additive distance.
inline MetricAuditResult audit_metric_axioms(const std::vector<WeightedPoint>& pts,
                                             const MetricOracle& oracle, int sample_count,
                                             std::uint64_t seed = 1) {
  MetricAuditResult res;
  const int n = static_cast<int>(pts.size());
  if (n < 3) return res;  // vacuous

  auto dw = [&](int a, int b) { return additive_distance(pts, a, b, oracle); };
  auto consider = [&](int a, int b, int c) {
    const double dab = dw(a, b);
    const double scale = std::max({1.0, dab});
    const double sym = std::abs(dab - dw(b, a));
    if (sym > res.worst_slack) { res.worst_slack = sym; res.witness = {a, b, c}; }
    const double slack = dab - dw(a, c) - dw(c, b);
    if (slack > res.worst_slack) { res.worst_slack = slack; res.witness = {a, b, c}; }
    if (sym > kRelTol * scale || slack > kRelTol * scale) res.ok = false;
  };

  if (n <= 30) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (a != b && b != c && a != c) consider(a, b, c);
  } else {
    Rng rng(seed);
    for (int s = 0; s < sample_count; ++s) {
      int a = rng.uniform_int(0, n - 1);
      int b = rng.uniform_int(0, n - 1);
      int c = rng.uniform_int(0, n - 1);
      if (a == b || b == c || a == c) { --s; continue; }
      consider(a, b, c);
    }
  }
  return res;
}

// Edge provenance, kept for auditing construction output.
enum class EdgeKind { kBase, kIntraCluster, kCenterNeighbor, kLifted, kComplete };

struct EdgeTag {
  EdgeKind kind = EdgeKind::kBase;
  int level = -1;  // recursion level for lifted edges, -1 elsewhere

  std::string str() const {
    switch (kind) {
      case EdgeKind::kBase: return "base-spanner";
      case EdgeKind::kIntraCluster: return "intra-cluster";
      case EdgeKind::kCenterNeighbor: return "center-neighbor";
      case EdgeKind::kComplete: return "complete";
      case EdgeKind::kLifted: return "lifted:" + std::to_string(level);
    }
    return "base-spanner";
  }

  static EdgeTag parse(const std::string& s) {
    EdgeTag t;
    if (s == "base-spanner") t.kind = EdgeKind::kBase;
    else if (s == "intra-cluster") t.kind = EdgeKind::kIntraCluster;
    else if (s == "center-neighbor") t.kind = EdgeKind::kCenterNeighbor;
    else if (s == "complete") t.kind = EdgeKind::kComplete;
    else if (s.rfind("lifted:", 0) == 0) {
      t.kind = EdgeKind::kLifted;
      t.level = std::stoi(s.substr(7));
    } else {
      throw std::invalid_argument("unknown edge provenance: " + s);
    }
    return t;
  }
};

struct SpannerEdge {
  int u = 0, v = 0;      // u < v
  double length = 0.0;   // additive distance of the endpoints at build time
  EdgeTag tag;
};

// Undirected graph over point ids; no self loops, no duplicates (the first
// insertion of a pair wins).
class Spanner {
 public:
  Spanner() = default;
  explicit Spanner(int n) : n_(n) {}

  int size() const { return n_; }
  const std::vector<SpannerEdge>& edges() const { return edges_; }

  bool add_edge(int u, int v, double length, EdgeTag tag = {}) {
    if (u == v) throw std::invalid_argument("self loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    const auto key = std::make_pair(u, v);
    if (index_.count(key)) return false;
    index_.emplace(key, edges_.size());
    edges_.push_back({u, v, length, tag});
    adjacency_.clear();
    return true;
  }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return index_.count({u, v}) > 0;
  }

  const SpannerEdge* find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = index_.find({u, v});
    return it == index_.end() ? nullptr : &edges_[it->second];
  }

  // Adjacency as (neighbor, edge length) lists, built on demand.
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
    if (adjacency_.empty() && n_ > 0) {
      adjacency_.assign(n_, {});
      for (const auto& e : edges_) {
        adjacency_[e.u].push_back({e.v, e.length});
        adjacency_[e.v].push_back({e.u, e.length});
      }
      for (auto& a : adjacency_) std::sort(a.begin(), a.end());
    }
    return adjacency_;
  }

  std::vector<int> neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    std::vector<int> out;
    for (const auto& [w, len] : adjacency()[v]) { (void)len; out.push_back(w); }
    return out;
  }

  void sort_edges() {
    std::sort(edges_.begin(), edges_.end(), [](const SpannerEdge& a, const SpannerEdge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    index_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) index_[{edges_[i].u, edges_[i].v}] = i;
    adjacency_.clear();
  }

 private:
  int n_ = 0;
  std::vector<SpannerEdge> edges_;
  std::map<std::pair<int, int>, std::size_t> index_;
  mutable std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

}  // namespace ftspan
