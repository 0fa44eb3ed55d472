// Cone-based k-fault-tolerant spanner for unweighted Euclidean points: every
// point connects to the k+1 nearest points inside each cone of an angular
// cover, which keeps a t-bounded path alive under any k vertex failures.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ftspan/core.hpp"

namespace ftspan {

// Angular cover of R^d. For d=2 the cones are equal sectors; for d>=3 they
// are angular balls of radius theta/2 around a direction net, so any two
// vectors in one cone span an angle of at most theta.
struct ConeScheme {
  int dim = 2;
  double theta = 0.0;
  std::vector<std::vector<double>> axes;  // unit directions, empty for d<=2
  int sector_count = 0;                   // d=2 only

  int cone_count() const {
    if (dim == 1) return 2;
    if (dim == 2) return sector_count;
    return static_cast<int>(axes.size());
  }

  // Lowest-indexed cone containing direction v (not necessarily unit).
  int cone_of(const std::vector<double>& v) const {
    double n2 = 0.0;
    for (double c : v) n2 += c * c;
    if (n2 < 1e-30) return 0;  // coincident points: treat as cone 0
    if (dim == 1) return v[0] > 0.0 ? 0 : 1;
    if (dim == 2) {
      double ang = std::atan2(v[1], v[0]);  // [-pi, pi]
      if (ang < 0) ang += 2.0 * M_PI;
      int idx = static_cast<int>(ang / (2.0 * M_PI) * sector_count);
      return std::min(idx, sector_count - 1);
    }
    const double n = std::sqrt(n2);
    const double cos_r = std::cos(theta / 2.0);
    int best = 0;
    double best_dot = -2.0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      double d = 0.0;
      for (int j = 0; j < dim; ++j) d += axes[i][j] * v[j];
      d /= n;
      if (d >= cos_r - 1e-12) return static_cast<int>(i);
      if (d > best_dot) { best_dot = d; best = static_cast<int>(i); }
    }
    return best;  // numerical fallback: nearest axis
  }

  // Largest theta with single-fault theta-graph stretch 1/(cos t - sin t)
  // below t_base, then the induced cover.
  static ConeScheme for_stretch(int dim, double t_base) {
    if (t_base <= 1.0) throw std::invalid_argument("base stretch must exceed 1");
    if (dim < 1 || dim > 4) throw std::invalid_argument("supported dimensions are 1..4");
    ConeScheme s;
    s.dim = dim;
    // cos(theta) - sin(theta) = 1/t_base  <=>  sqrt(2) cos(theta + pi/4) = 1/t_base
    s.theta = std::acos(1.0 / (std::sqrt(2.0) * t_base)) - M_PI / 4.0;
    if (dim == 1) return s;
    if (dim == 2) {
      s.sector_count = static_cast<int>(std::ceil(2.0 * M_PI / s.theta));
      return s;
    }
    s.axes = build_direction_net(dim, s.theta / 2.0);
    return s;
  }

  // Greedy farthest-point net over a deterministic candidate pool until the
  // pool is covered within the requested angular radius.
  static std::vector<std::vector<double>> build_direction_net(int dim, double radius) {
    std::vector<std::vector<double>> pool;
    if (dim == 3) {
      const int m = 4096;
      const double ga = M_PI * (3.0 - std::sqrt(5.0));
      for (int i = 0; i < m; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / m;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double a = ga * i;
        pool.push_back({r * std::cos(a), r * std::sin(a), z});
      }
    } else {
      Rng rng(0x9e3779b97f4a7c15ull);
      const int m = 20000;
      for (int i = 0; i < m; ++i) {
        std::vector<double> v(dim);
        double n2 = 0.0;
        for (int j = 0; j < dim; ++j) {
          // Box-Muller from the shared deterministic stream.
          const double u1 = std::max(rng.uniform01(), 1e-16);
          const double u2 = rng.uniform01();
          v[j] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
          n2 += v[j] * v[j];
        }
        const double n = std::sqrt(n2);
        for (double& c : v) c /= n;
        pool.push_back(std::move(v));
      }
    }
    const double target = std::cos(radius * 0.95);
    std::vector<std::vector<double>> net;
    std::vector<double> best(pool.size(), -2.0);
    net.push_back(pool[0]);
    auto update = [&](const std::vector<double>& axis) {
      for (std::size_t i = 0; i < pool.size(); ++i) {
        double d = 0.0;
        for (int j = 0; j < dim; ++j) d += axis[j] * pool[i][j];
        best[i] = std::max(best[i], d);
      }
    };
    update(net.back());
    while (true) {
      std::size_t worst = 0;
      for (std::size_t i = 1; i < pool.size(); ++i)
        if (best[i] < best[worst]) worst = i;
      if (best[worst] >= target) break;
      net.push_back(pool[worst]);
      update(net.back());
    }
    return net;
  }
};

// (k, t_base)-fault-tolerant spanner on bare coordinates; edge lengths are
// Euclidean. Falls back to the complete graph when n <= k + 2, where global
// connectivity under k faults requires it anyway.
inline Spanner build_cone_spanner(const std::vector<std::vector<double>>& pts, int k,
                                  double t_base) {
  if (t_base <= 1.0) throw std::invalid_argument("base stretch must exceed 1");
  if (k < 1) throw std::invalid_argument("fault parameter k must be >= 1");
  const int n = static_cast<int>(pts.size());
  if (n < 1) throw std::invalid_argument("need at least one point");
  const int dim = static_cast<int>(pts[0].size());

  Spanner g(n);
  if (n <= k + 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        g.add_edge(i, j, euclidean(pts[i], pts[j]), {EdgeKind::kComplete, -1});
    g.sort_edges();
    return g;
  }

  const ConeScheme scheme = ConeScheme::for_stretch(dim, t_base);
  const int cones = scheme.cone_count();
  std::vector<std::vector<std::pair<double, int>>> buckets(cones);
  std::vector<double> dir(dim);

  for (int u = 0; u < n; ++u) {
    for (auto& b : buckets) b.clear();
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      for (int j = 0; j < dim; ++j) dir[j] = pts[v][j] - pts[u][j];
      buckets[scheme.cone_of(dir)].push_back({euclidean(pts[u], pts[v]), v});
    }
    for (auto& b : buckets) {
      const int take = std::min<int>(k + 1, static_cast<int>(b.size()));
      std::partial_sort(b.begin(), b.begin() + take, b.end());
      for (int i = 0; i < take; ++i)
        g.add_edge(u, b[i].second, b[i].first, {EdgeKind::kBase, -1});
    }
  }
  g.sort_edges();
  return g;
}

}  // namespace ftspan
