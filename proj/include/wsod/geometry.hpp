#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wsod/error.hpp"
#include "wsod/types.hpp"

namespace wsod {

namespace geometry {

/// Length tolerance for collinearity and overlap tests.
inline constexpr double kTolerance = 1e-9;

inline double cross(Point2 o, Point2 a, Point2 b) noexcept { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

/// Drops a repeated closing vertex so every ring is implicitly closed.
inline Ring normalize_ring(Ring ring) {
  if (ring.size() >= 2 && ring.front() == ring.back())
    ring.pop_back();
  return ring;
}

inline std::size_t distinct_vertex_count(std::span<const Point2> ring) {
  std::vector<Point2> pts(ring.begin(), ring.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  return static_cast<std::size_t>(std::unique(pts.begin(), pts.end()) - pts.begin());
}

/// Shoelace sum; positive for counter-clockwise rings.
inline double signed_area(std::span<const Point2> ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 3)
    return 0.0;
  // Shift to the first vertex to keep the sum well conditioned far from the origin.
  const Point2 o = ring[0];
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i)
    twice += cross(o, ring[i], ring[i + 1]);
  return 0.5 * twice;
}

inline bool on_segment(Point2 p, Point2 a, Point2 b) noexcept {
  return std::min(a.x, b.x) - kTolerance <= p.x && p.x <= std::max(a.x, b.x) + kTolerance &&
         std::min(a.y, b.y) - kTolerance <= p.y && p.y <= std::max(a.y, b.y) + kTolerance;
}

inline bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2) noexcept {
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  return (d1 == 0 && on_segment(p1, q1, q2)) || (d2 == 0 && on_segment(p2, q1, q2)) ||
         (d3 == 0 && on_segment(q1, p1, p2)) || (d4 == 0 && on_segment(q2, p1, p2));
}

/// True when two non-adjacent edges of the ring touch or cross.
inline bool self_intersects(std::span<const Point2> ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 4)
    return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a1 = ring[i], a2 = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1))
        continue;
      if (segments_intersect(a1, a2, ring[j], ring[(j + 1) % n]))
        return true;
    }
  }
  return false;
}

/// Empty when the ring is usable, otherwise the reason it is not.
inline std::string ring_problem(std::span<const Point2> ring) {
  for (const auto &p : ring)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      return "non-finite vertex";
  if (distinct_vertex_count(ring) < 3)
    return "ring has fewer than 3 distinct vertices";
  if (std::abs(signed_area(ring)) <= kTolerance * kTolerance)
    return "ring has zero area";
  if (self_intersects(ring))
    return "ring is self-intersecting";
  return {};
}

/// Length of the collinear overlap of two segments, 0 when they are not collinear.
inline double collinear_overlap(Point2 a1, Point2 a2, Point2 b1, Point2 b2) noexcept {
  const double len = distance(a1, a2);
  if (len <= kTolerance)
    return 0.0;
  const double ux = (a2.x - a1.x) / len, uy = (a2.y - a1.y) / len;
  // perpendicular offsets of the other segment's endpoints
  const double off1 = (b1.x - a1.x) * uy - (b1.y - a1.y) * ux;
  const double off2 = (b2.x - a1.x) * uy - (b2.y - a1.y) * ux;
  if (std::abs(off1) > kTolerance || std::abs(off2) > kTolerance)
    return 0.0;
  const double t1 = (b1.x - a1.x) * ux + (b1.y - a1.y) * uy;
  const double t2 = (b2.x - a1.x) * ux + (b2.y - a1.y) * uy;
  const double lo = std::max(0.0, std::min(t1, t2));
  const double hi = std::min(len, std::max(t1, t2));
  return std::max(0.0, hi - lo);
}

struct Box {
  double min_x, min_y, max_x, max_y;

  bool overlaps(const Box &o, double tol = kTolerance) const noexcept {
    return min_x <= o.max_x + tol && o.min_x <= max_x + tol && min_y <= o.max_y + tol && o.min_y <= max_y + tol;
  }
};

inline Box bounds(std::span<const Point2> ring) noexcept {
  Box b{kUnbounded, kUnbounded, -kUnbounded, -kUnbounded};
  for (const auto &p : ring) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

/// Total length of boundary shared by two ring sets (all rings of each polygon).
inline double shared_boundary_length(const PolygonSite &a, const PolygonSite &b) {
  auto rings = [](const PolygonSite &p) {
    std::vector<std::span<const Point2>> out{std::span<const Point2>(p.exterior)};
    for (const auto &h : p.holes)
      out.emplace_back(h);
    return out;
  };
  double total = 0.0;
  for (auto ra : rings(a)) {
    for (auto rb : rings(b)) {
      if (!bounds(ra).overlaps(bounds(rb)))
        continue;
      for (std::size_t i = 0; i < ra.size(); ++i) {
        const Point2 a1 = ra[i], a2 = ra[(i + 1) % ra.size()];
        for (std::size_t j = 0; j < rb.size(); ++j)
          total += collinear_overlap(a1, a2, rb[j], rb[(j + 1) % rb.size()]);
      }
    }
  }
  return total;
}

} // namespace geometry

inline void require_valid_rings(const PolygonSite &polygon) {
  if (auto why = geometry::ring_problem(polygon.exterior); !why.empty())
    throw GeometryError("polygon " + polygon.id.str() + ": exterior " + why);
  for (const auto &hole : polygon.holes)
    if (auto why = geometry::ring_problem(hole); !why.empty())
      throw GeometryError("polygon " + polygon.id.str() + ": hole " + why);
}

/// Exterior area minus hole areas. Throws GeometryError for degenerate rings.
inline double polygon_area(const PolygonSite &polygon) {
  require_valid_rings(polygon);
  double area = std::abs(geometry::signed_area(polygon.exterior));
  for (const auto &hole : polygon.holes)
    area -= std::abs(geometry::signed_area(hole));
  if (!(area > 0.0))
    throw GeometryError("polygon " + polygon.id.str() + ": holes cover the whole exterior");
  return area;
}

/// Area-weighted centroid with holes subtracted.
inline Point2 polygon_centroid(const PolygonSite &polygon) {
  const double area = polygon_area(polygon);
  const Point2 o = polygon.exterior.front();
  // first moments relative to o, each ring taken with positive orientation
  auto moments = [o](std::span<const Point2> ring, double &mx, double &my) {
    const double sign = geometry::signed_area(ring) < 0 ? -1.0 : 1.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 p{ring[i].x - o.x, ring[i].y - o.y};
      const Point2 q{ring[(i + 1) % n].x - o.x, ring[(i + 1) % n].y - o.y};
      const double c = sign * (p.x * q.y - q.x * p.y);
      mx += (p.x + q.x) * c;
      my += (p.y + q.y) * c;
    }
  };
  double ex = 0.0, ey = 0.0;
  moments(polygon.exterior, ex, ey);
  for (const auto &hole : polygon.holes) {
    double hx = 0.0, hy = 0.0;
    moments(hole, hx, hy);
    ex -= hx;
    ey -= hy;
  }
  return {o.x + ex / (6.0 * area), o.y + ey / (6.0 * area)};
}

inline double site_distance(const PointSite &a, const PointSite &b) {
  const double d = distance(a.location, b.location);
  if (!(d > 0.0))
    throw DegenerateDistanceError("sites " + a.id.str() + " and " + b.id.str() + " are coincident");
  return d;
}

/// Distance between area centroids.
inline double site_distance(const PolygonSite &a, const PolygonSite &b) {
  const double d = distance(polygon_centroid(a), polygon_centroid(b));
  if (!(d > 0.0))
    throw DegenerateDistanceError("polygons " + a.id.str() + " and " + b.id.str() + " have coincident centroids");
  return d;
}

} // namespace wsod
