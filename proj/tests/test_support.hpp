#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wsod/dataset.hpp"
#include "wsod/types.hpp"

namespace wsod::testing {

inline constexpr std::uint32_t kSeed = 20240611;

/// Polygon star-shaped about center: one vertex per equal angular sector at a
/// random radius, so the ring is simple.
inline Ring random_star(std::mt19937 &rng, Point2 center, int vertices) {
  const double sector = 2.0 * M_PI / vertices;
  std::uniform_real_distribution<double> jitter(0.1 * sector, 0.9 * sector);
  std::uniform_real_distribution<double> radius(0.5, 3.0);
  Ring ring;
  for (int k = 0; k < vertices; ++k) {
    const double a = k * sector + jitter(rng);
    const double r = radius(rng);
    ring.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
  }
  return ring;
}

inline Point2 rotate(Point2 p, double angle) {
  return {p.x * std::cos(angle) - p.y * std::sin(angle), p.x * std::sin(angle) + p.y * std::cos(angle)};
}

inline PolygonSite square(const char *id, double x, double y, double side = 1.0) {
  return {SiteId(id), {{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}}, {}, {{"v", 0.0}}};
}

} // namespace wsod::testing

namespace wsod::testing {

struct IndexEdge {
  int a;
  int b;
  double cost;
};

/// Minimum over all simple paths by exhaustive depth-first enumeration;
/// negative when no path exists or the minimum exceeds limit.
inline double brute_force_min_cost(int nodes, const std::vector<IndexEdge> &edges, int src, int dst, double limit) {
  if (src == dst)
    return 0.0;
  double best = -1.0;
  std::vector<bool> on_path(nodes, false);
  auto walk = [&](auto &&self, int at, double cost) -> void {
    if (at == dst) {
      if (best < 0.0 || cost < best)
        best = cost;
      return;
    }
    on_path[at] = true;
    for (const auto &e : edges) {
      int next = -1;
      if (e.a == at)
        next = e.b;
      else if (e.b == at)
        next = e.a;
      if (next >= 0 && !on_path[next])
        self(self, next, cost + e.cost);
    }
    on_path[at] = false;
  };
  walk(walk, src, 0.0);
  return best >= 0.0 && best <= limit ? best : -1.0;
}

/// Random multigraph on up to 8 nodes placed on a circle.
struct RandomGraph {
  int nodes = 0;
  std::vector<IndexEdge> edges;

  SpatialDataset dataset() const {
    std::vector<PointSite> sites;
    for (int i = 0; i < nodes; ++i) {
      const double a = 2.0 * M_PI * i / nodes;
      sites.push_back({SiteId("n" + std::to_string(i)), {std::cos(a) * 10.0, std::sin(a) * 10.0}, {{"v", 1.0 * i}}});
    }
    std::vector<Edge> out;
    for (const auto &e : edges)
      out.push_back({sites[e.a].id, sites[e.b].id, 1.0, e.cost});
    return SpatialDataset::from_points(std::move(sites), std::move(out));
  }
};

inline RandomGraph random_graph(std::mt19937 &rng) {
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_real_distribution<double> cost(0.0, 10.0);
  std::bernoulli_distribution integral(0.3);
  RandomGraph g;
  g.nodes = size(rng);
  std::uniform_int_distribution<int> count(0, g.nodes * 2);
  std::uniform_int_distribution<int> node(0, g.nodes - 1);
  const int m = count(rng);
  for (int k = 0; k < m; ++k) {
    const int a = node(rng), b = node(rng);
    if (a == b)
      continue;
    // integral costs produce ties between distinct paths
    const double c = integral(rng) ? std::floor(cost(rng)) : cost(rng);
    g.edges.push_back({a, b, c});
  }
  return g;
}

} // namespace wsod::testing
