// Structural records collected while building spanners, so tests can check
// per-level invariants (split balance, separator size, cluster admission)
// without re-running the constructions.
#pragma once

#include <vector>

namespace ftspan {

struct SplitRecord {
  int level = 0;
  int total = 0;
  int left = 0;
  int right = 0;
};

struct SeparatorRecord {
  int m = 0;       // dual-graph vertices at this level
  int r_size = 0;  // separator size
  double w_p = 0.0, w_q = 0.0, w_total = 0.0;
};

struct SpSeparatorRecord {
  int n = 0;
  int inside = 0;
  bool relaxed = false;
  bool triangle = false;
};

struct ClusterRecord {
  int n = 0;
  int k = 0;
  double epsilon = 0.0;
  double worst_admission_slack = 0.0;  // max |pc| - eps*w(p) over members; <= 0 when clean
  bool center_min_weight_ok = true;
};

struct DecompositionRecord {
  int holes = 0;
  int cell_count = 0;
  int max_portals_per_cell = 0;
};

struct BuildAudit {
  std::vector<SplitRecord> splits;
  std::vector<SeparatorRecord> separators;
  std::vector<SpSeparatorRecord> sp_separators;
  std::vector<ClusterRecord> clusterings;
  std::vector<DecompositionRecord> decompositions;
  int max_level = 0;

  void note_level(int level) {
    if (level > max_level) max_level = level;
  }
};

}  // namespace ftspan
