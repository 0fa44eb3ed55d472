// Brute-force certification of fault-tolerant stretch: enumerate fault sets,
// run shortest paths on the surviving graph, and report the worst ratio of
// graph distance to additive distance over surviving pairs.
#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <thread>
#include <vector>

#include "ftspan/core.hpp"

namespace ftspan {

class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, std::int64_t required)
      : std::runtime_error(what), required_steps(required) {}
  std::int64_t required_steps = 0;
};

struct StretchReport {
  double worst_stretch = 0.0;
  std::vector<int> witness_fault_set;
  std::pair<int, int> witness_pair{-1, -1};
  std::map<int, std::int64_t> case_histogram;
  std::int64_t pairs_checked = 0;
  std::int64_t fault_sets_checked = 0;
  double bound = 0.0;
  bool pass = false;
  std::string mode = "exhaustive";
};

// Tags a verified pair with a structural case id (construction-specific);
// returns 0 when unclassified.
using CaseClassifier = std::function<int(int p, int q, const std::vector<int>& fault_set)>;

struct VerifyOptions {
  std::int64_t step_budget = 1'000'000'000;
  int threads = 1;
  CaseClassifier classifier;
};

inline std::vector<double> dijkstra_masked(const Spanner& g, int src, const std::vector<char>& dead) {
  const double inf = std::numeric_limits<double>::infinity();
  const auto& adj = g.adjacency();
  std::vector<double> dist(g.size(), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[src] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, len] : adj[u]) {
      if (dead[v]) continue;
      const double nd = d + len;
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.push({nd, v});
      }
    }
  }
  return dist;
}

namespace detail {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > (std::int64_t{1} << 60)) return std::int64_t{1} << 60;
  }
  return r;
}

template <typename Fn>
inline void for_each_combination(int n, int k, Fn&& fn) {
  if (k == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Fault-set sizes to enumerate: exactly k suffices when n >= k+2 (any smaller
// fault set extends to a size-k one avoiding a surviving pair, and removals
// only lengthen distances); otherwise all feasible sizes.
inline std::vector<int> fault_sizes(int n, int k) {
  if (n >= k + 2) return {k};
  std::vector<int> sizes;
  for (int s = 0; s <= std::min(k, n - 2); ++s) sizes.push_back(s);
  return sizes;
}

struct FaultResult {
  double worst = 0.0;
  std::vector<int> fault;
  std::pair<int, int> pair{-1, -1};
  std::int64_t pairs = 0;
  std::map<int, std::int64_t> histogram;

  bool beats(const FaultResult& o) const {
    if (worst != o.worst) return worst > o.worst;
    if (fault != o.fault) return fault < o.fault;
    return pair < o.pair;
  }
};

inline FaultResult evaluate_fault_set(const std::vector<WeightedPoint>& pts,
                                      const MetricOracle& oracle, const Spanner& g,
                                      const std::vector<int>& fault,
                                      const CaseClassifier& classifier) {
  const double inf = std::numeric_limits<double>::infinity();
  const int n = g.size();
  std::vector<char> dead(n, 0);
  for (int f : fault) dead[f] = 1;
  FaultResult res;
  res.fault = fault;
  res.worst = 1.0;
  res.pair = {-1, -1};
  bool any_pair = false;
  for (int src = 0; src < n; ++src) {
    if (dead[src]) continue;
    const auto dist = dijkstra_masked(g, src, dead);
    for (int dst = src + 1; dst < n; ++dst) {
      if (dead[dst]) continue;
      any_pair = true;
      ++res.pairs;
      if (classifier) res.histogram[classifier(src, dst, fault)]++;
      const double dw = additive_distance(pts, src, dst, oracle);
      double stretch;
      if (dw <= 0.0) {
        // Coincident zero-weight points: the graph must also see them at
        // distance zero, otherwise the ratio is undefined and we fail.
        stretch = (dist[dst] == 0.0) ? 1.0 : inf;
      } else {
        stretch = dist[dst] / dw;
      }
      if (stretch > res.worst || res.pair.first < 0) {
        res.worst = stretch;
        res.pair = {src, dst};
      }
    }
  }
  if (!any_pair) res.worst = 0.0;
  return res;
}

inline StretchReport run_fault_sets(const std::vector<WeightedPoint>& pts,
                                    const MetricOracle& oracle, const Spanner& g,
                                    const std::vector<std::vector<int>>& fault_sets,
                                    double bound, const VerifyOptions& opt) {
  std::vector<FaultResult> results(fault_sets.size());
  const int threads = std::max(1, opt.threads);
  if (threads == 1 || fault_sets.size() < 2) {
    for (std::size_t i = 0; i < fault_sets.size(); ++i)
      results[i] = evaluate_fault_set(pts, oracle, g, fault_sets[i], opt.classifier);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= fault_sets.size()) break;
          results[i] = evaluate_fault_set(pts, oracle, g, fault_sets[i], opt.classifier);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  StretchReport rep;
  rep.bound = bound;
  rep.fault_sets_checked = static_cast<std::int64_t>(fault_sets.size());
  const FaultResult* best = nullptr;
  for (const auto& r : results) {
    rep.pairs_checked += r.pairs;
    for (const auto& [c, cnt] : r.histogram) rep.case_histogram[c] += cnt;
    if (r.pair.first < 0) continue;
    if (!best || r.beats(*best)) best = &r;
  }
  if (best) {
    rep.worst_stretch = best->worst;
    rep.witness_fault_set = best->fault;
    rep.witness_pair = best->pair;
  }
  rep.pass = std::isfinite(rep.worst_stretch) && rep.worst_stretch <= bound * (1.0 + kRelTol);
  return rep;
}

}  // namespace detail

// Exhaustive verification over all fault sets (see detail::fault_sizes for
// which sizes are enumerated). Throws budget_error when the estimated work
// exceeds the configured step budget.
inline StretchReport verify_stretch(const std::vector<WeightedPoint>& pts,
                                    const MetricOracle& oracle, const Spanner& g, int k,
                                    double bound, const VerifyOptions& opt = {}) {
  const int n = g.size();
  if (n < 2) throw std::invalid_argument("verification needs at least two points");
  const auto sizes = detail::fault_sizes(n, k);
  std::int64_t n_sets = 0;
  for (int s : sizes) n_sets += detail::binomial(n, s);
  const std::int64_t steps =
      n_sets * static_cast<std::int64_t>(n) * n *
      std::max<std::int64_t>(1, static_cast<std::int64_t>(g.edges().size()));
  if (steps > opt.step_budget)
    throw budget_error("verification budget exceeded; use sampled mode", steps);

  std::vector<std::vector<int>> fault_sets;
  fault_sets.reserve(static_cast<std::size_t>(n_sets));
  for (int s : sizes)
    detail::for_each_combination(n, s, [&](const std::vector<int>& f) { fault_sets.push_back(f); });
  StretchReport rep = detail::run_fault_sets(pts, oracle, g, fault_sets, bound, opt);
  rep.mode = "exhaustive";
  return rep;
}

// Random size-k fault sets; lower-bounds the true worst stretch.
inline StretchReport worst_stretch_sampled(const std::vector<WeightedPoint>& pts,
                                           const MetricOracle& oracle, const Spanner& g, int k,
                                           double bound, int samples, std::uint64_t seed,
                                           const VerifyOptions& opt = {}) {
  const int n = g.size();
  if (n < 2) throw std::invalid_argument("verification needs at least two points");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const int eff_k = std::min(k, n - 2);
  Rng rng(seed);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::vector<std::vector<int>> fault_sets;
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < eff_k; ++i) {
      const int j = i + static_cast<int>(rng.next_u64() % (n - i));
      std::swap(ids[i], ids[j]);
    }
    std::vector<int> f(ids.begin(), ids.begin() + eff_k);
    std::sort(f.begin(), f.end());
    fault_sets.push_back(std::move(f));
  }
  StretchReport rep = detail::run_fault_sets(pts, oracle, g, fault_sets, bound, opt);
  rep.mode = "sampled";
  return rep;
}

struct EdgeAuditRow {
  std::string setting;
  int n = 0;
  int k = 0;
  double epsilon = 0.0;
  int h = 0;
  std::int64_t total = 0;
  std::map<std::string, std::int64_t> by_kind;
};

inline EdgeAuditRow edge_audit(const Spanner& g, const std::string& setting, int k, double epsilon,
                               int h = 0) {
  EdgeAuditRow row;
  row.setting = setting;
  row.n = g.size();
  row.k = k;
  row.epsilon = epsilon;
  row.h = h;
  row.total = static_cast<std::int64_t>(g.edges().size());
  for (const auto& e : g.edges()) {
    std::string key = e.tag.str();
    if (e.tag.kind == EdgeKind::kLifted) key = "lifted";  // aggregate across levels
    row.by_kind[key]++;
  }
  return row;
}

}  // namespace ftspan
