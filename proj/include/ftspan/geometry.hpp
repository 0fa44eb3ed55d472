// Planar and 3D primitives shared by the spanner constructions.
//
// Predicates use plain double arithmetic with an absolute tolerance of
// 1e-12 on near-degenerate sign tests; inputs are assumed to be at desk
// scale (coordinates of magnitude ~1e-3..1e3).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ftspan {

inline constexpr double kSignEps = 1e-12;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
  Vec3() = default;
  Vec3(double xx, double yy, double zz) : x(xx), y(yy), z(zz) {}
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double dist(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double norm3(const Vec3& a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }
inline double dist3(const Vec3& a, const Vec3& b) { return norm3(a - b); }

// Twice the signed area of (a,b,c); > 0 when c lies left of the ray a->b.
inline double orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline int orient_sign(const Vec2& a, const Vec2& b, const Vec2& c, double eps = kSignEps) {
  const double v = orient(a, b, c);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

// Whether c lies on segment [a,b]; assumes orient(a,b,c) ~ 0.
inline bool on_segment_collinear(const Vec2& a, const Vec2& b, const Vec2& c, double eps = kSignEps) {
  return std::min(a.x, b.x) - eps <= c.x && c.x <= std::max(a.x, b.x) + eps &&
         std::min(a.y, b.y) - eps <= c.y && c.y <= std::max(a.y, b.y) + eps;
}

inline bool point_on_segment(const Vec2& a, const Vec2& b, const Vec2& c, double eps = kSignEps) {
  if (orient_sign(a, b, c, eps * std::max(1.0, dist(a, b))) != 0) return false;
  return on_segment_collinear(a, b, c, eps);
}

// True proper crossing: interiors of [a,b] and [c,d] meet in a single point.
inline bool segments_cross_properly(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                                    double eps = kSignEps) {
  const int d1 = orient_sign(c, d, a, eps);
  const int d2 = orient_sign(c, d, b, eps);
  const int d3 = orient_sign(a, b, c, eps);
  const int d4 = orient_sign(a, b, d, eps);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

// Any contact between closed segments [a,b] and [c,d].
inline bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                           double eps = kSignEps) {
  if (segments_cross_properly(a, b, c, d, eps)) return true;
  return point_on_segment(a, b, c, eps) || point_on_segment(a, b, d, eps) ||
         point_on_segment(c, d, a, eps) || point_on_segment(c, d, b, eps);
}

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 <= 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + ab * t);
}

enum class Location { kInside, kBoundary, kOutside };

// Crossing-number test on a closed polygon ring; boundary contacts are
// reported as kBoundary.
inline Location locate_in_ring(const std::vector<Vec2>& ring, const Vec2& p, double eps = kSignEps) {
  const std::size_t n = ring.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    if (point_on_segment(a, b, p, eps)) return Location::kBoundary;
    const bool a_above = a.y > p.y;
    const bool b_above = b.y > p.y;
    if (a_above != b_above) {
      const double x_at = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (x_at > p.x) inside = !inside;
    }
  }
  return inside ? Location::kInside : Location::kOutside;
}

inline double ring_signed_area(const std::vector<Vec2>& ring) {
  double s = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    s += cross(a, b);
  }
  return 0.5 * s;
}

inline double polyline_length(const std::vector<Vec2>& pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) len += dist(pts[i - 1], pts[i]);
  return len;
}

// Indices of the first self-intersecting edge pair, or (-1,-1).
inline std::pair<int, int> find_self_intersection(const std::vector<Vec2>& ring, double eps = kSignEps) {
  const int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Vec2& c = ring[j];
      const Vec2& d = ring[(j + 1) % n];
      if (adjacent) {
        // Shared endpoint is fine; overlap beyond it is not.
        if (segments_cross_properly(a, b, c, d, eps)) return {i, j};
        continue;
      }
      if (segments_touch(a, b, c, d, eps)) return {i, j};
    }
  }
  return {-1, -1};
}

// Golden-section minimizer for a unimodal f on [lo, hi].
template <typename F>
inline std::pair<double, double> golden_minimize(F&& f, double lo, double hi, double tol) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (hi < lo) std::swap(lo, hi);
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  // Clamp against the endpoints in case the minimum sits on the boundary.
  double best_x = (f1 <= f2) ? x1 : x2;
  double best_f = std::min(f1, f2);
  for (double cand : {lo, hi}) {
    const double fc = f(cand);
    if (fc < best_f) { best_f = fc; best_x = cand; }
  }
  return {best_x, best_f};
}

class geometry_error : public std::runtime_error {
 public:
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ftspan
