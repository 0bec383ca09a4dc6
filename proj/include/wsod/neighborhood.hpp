#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsod/dataset.hpp"
#include "wsod/error.hpp"
#include "wsod/geometry.hpp"
#include "wsod/types.hpp"

namespace wsod {

/// Raised when a neighbor regime does not fit the dataset kind.
class RegimeError : public Error {
public:
  using Error::Error;
};

enum class Regime {
  buffer,   ///< every site within the buffer radius
  graph,    ///< sites sharing at least one edge
  polygon,  ///< polygons sharing a boundary segment of positive length
  combined, ///< buffer membership with edge factors layered on
};

inline std::string_view to_string(Regime r) noexcept {
  switch (r) {
  case Regime::buffer:
    return "buffer";
  case Regime::graph:
    return "graph";
  case Regime::polygon:
    return "polygon";
  case Regime::combined:
    return "combined";
  }
  return "?";
}

inline std::optional<Regime> parse_regime(std::string_view s) noexcept {
  for (auto r : {Regime::buffer, Regime::graph, Regime::polygon, Regime::combined})
    if (to_string(r) == s)
      return r;
  return std::nullopt;
}

struct NeighborFactors {
  SiteId center;
  SiteId neighbor;
  double distance = 0.0;                ///< D, strictly positive
  unsigned connection_count = 0;        ///< R, parallel edges joining the pair
  std::optional<double> min_cost;       ///< C, empty when unreachable within the cost limit

  friend bool operator==(const NeighborFactors &, const NeighborFactors &) = default;
};

/// Undirected adjacency over a dataset's edge multigraph.
class EdgeGraph {
public:
  explicit EdgeGraph(const SpatialDataset &dataset) : adjacency_(dataset.size()) {
    for (const auto &e : dataset.edges()) {
      const auto a = dataset.find(e.from);
      const auto b = dataset.find(e.to);
      if (!a || !b || *a == *b)
        continue;
      adjacency_[*a].push_back({*b, e.cost});
      adjacency_[*b].push_back({*a, e.cost});
    }
  }

  unsigned connection_count(std::size_t a, std::size_t b) const {
    return static_cast<unsigned>(
        std::count_if(adjacency_.at(a).begin(), adjacency_[a].end(), [b](const Arc &arc) { return arc.to == b; }));
  }

  std::vector<std::size_t> adjacent(std::size_t a) const {
    std::vector<std::size_t> out;
    for (const auto &arc : adjacency_.at(a))
      out.push_back(arc.to);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Cheapest path cost from source to every site; empty entries are
  /// unreachable or cost more than cost_limit.
  std::vector<std::optional<double>> costs_from(std::size_t source, double cost_limit) const {
    const std::size_t n = adjacency_.size();
    std::vector<double> best(n, kUnbounded);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    best.at(source) = 0.0;
    open.push({0.0, source});
    while (!open.empty()) {
      const auto [cost, at] = open.top();
      open.pop();
      if (cost > best[at])
        continue;
      for (const auto &arc : adjacency_[at]) {
        const double next = cost + arc.cost;
        if (next < best[arc.to] && next <= cost_limit) {
          best[arc.to] = next;
          open.push({next, arc.to});
        }
      }
    }
    std::vector<std::optional<double>> out(n);
    for (std::size_t i = 0; i < n; ++i)
      if (std::isfinite(best[i]) && best[i] <= cost_limit)
        out[i] = best[i];
    return out;
  }

private:
  struct Arc {
    std::size_t to;
    double cost;
  };
  std::vector<std::vector<Arc>> adjacency_;
};

namespace detail {

inline std::vector<SiteId> sorted_ids(const SpatialDataset &dataset, const std::vector<std::size_t> &indices) {
  std::vector<SiteId> out;
  out.reserve(indices.size());
  for (auto i : indices)
    out.push_back(dataset.id_at(i));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> buffer_indices(const SpatialDataset &dataset, std::size_t center, double radius) {
  std::vector<std::size_t> out;
  const Point2 c = dataset.location(center);
  for (std::size_t i = 0; i < dataset.size(); ++i)
    if (i != center && distance(c, dataset.location(i)) <= radius)
      out.push_back(i);
  return out;
}

inline std::vector<std::size_t> polygon_indices(const SpatialDataset &dataset, std::size_t center) {
  if (dataset.kind() != SiteKind::polygon)
    throw RegimeError("polygon adjacency requires a polygon dataset");
  std::vector<std::size_t> out;
  const auto &polys = dataset.polygons();
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (i != center && geometry::shared_boundary_length(polys[center], polys[i]) > geometry::kTolerance)
      out.push_back(i);
  return out;
}

} // namespace detail

/// Sites other than center within radius of it (centroids for polygons).
inline std::vector<SiteId> buffer_neighbors(const SpatialDataset &dataset, const SiteId &center, double radius) {
  return detail::sorted_ids(dataset, detail::buffer_indices(dataset, dataset.index_of(center), radius));
}

/// Sites sharing at least one edge with center, either orientation.
inline std::vector<SiteId> graph_neighbors(const SpatialDataset &dataset, const SiteId &center) {
  return detail::sorted_ids(dataset, EdgeGraph(dataset).adjacent(dataset.index_of(center)));
}

/// Polygons sharing a boundary of positive length with center; corner contact does not count.
inline std::vector<SiteId> polygon_adjacent_neighbors(const SpatialDataset &dataset, const SiteId &center) {
  return detail::sorted_ids(dataset, detail::polygon_indices(dataset, dataset.index_of(center)));
}

inline unsigned direct_connection_count(const SpatialDataset &dataset, const SiteId &a, const SiteId &b) {
  const auto ia = dataset.index_of(a);
  const auto ib = dataset.index_of(b);
  return EdgeGraph(dataset).connection_count(ia, ib);
}

/// Cheapest total edge cost between a and b over undirected paths; empty when
/// no path exists or the cheapest one exceeds cost_limit.
inline std::optional<double> min_cost(const SpatialDataset &dataset, const SiteId &a, const SiteId &b,
                                      double cost_limit = kUnbounded) {
  const auto ia = dataset.index_of(a);
  const auto ib = dataset.index_of(b);
  return EdgeGraph(dataset).costs_from(ia, cost_limit)[ib];
}

namespace detail {

inline std::vector<NeighborFactors> collect_factors(const SpatialDataset &dataset, const EdgeGraph &graph,
                                                    std::size_t center, std::vector<std::size_t> neighbors,
                                                    double cost_limit) {
  std::sort(neighbors.begin(), neighbors.end(),
            [&](std::size_t a, std::size_t b) { return dataset.id_at(a) < dataset.id_at(b); });
  const bool any_edges = !dataset.edges().empty();
  std::vector<std::optional<double>> costs;
  if (any_edges)
    costs = graph.costs_from(center, cost_limit);
  std::vector<NeighborFactors> out;
  out.reserve(neighbors.size());
  for (auto nb : neighbors) {
    if (nb == center)
      throw LookupError("neighbor set of " + dataset.id_at(center).str() + " contains the center");
    NeighborFactors f;
    f.center = dataset.id_at(center);
    f.neighbor = dataset.id_at(nb);
    f.distance = dataset.distance(center, nb);
    if (any_edges) {
      f.connection_count = graph.connection_count(center, nb);
      f.min_cost = costs[nb];
    }
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace detail

/// D, R and C for each neighbor of center, ordered by neighbor id.
inline std::vector<NeighborFactors> collect_factors(const SpatialDataset &dataset, const SiteId &center,
                                                    const std::vector<SiteId> &neighbors,
                                                    const WeightParams &params) {
  const auto c = dataset.index_of(center);
  std::vector<std::size_t> idx;
  idx.reserve(neighbors.size());
  for (const auto &id : neighbors)
    idx.push_back(dataset.index_of(id));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw LookupError("neighbor set of " + center.str() + " repeats a site");
  return detail::collect_factors(dataset, EdgeGraph(dataset), c, std::move(idx), params.cost_limit);
}

/// Regime used when none is requested: polygon adjacency for polygons, the
/// combined regime for points with edges, the buffer otherwise.
inline Regime default_regime(const SpatialDataset &dataset) noexcept {
  if (dataset.kind() == SiteKind::polygon)
    return Regime::polygon;
  return dataset.edges().empty() ? Regime::buffer : Regime::combined;
}

/// Neighbor sets of every site under one regime, indexed like the dataset.
inline std::vector<std::vector<std::size_t>> neighbor_sets(const SpatialDataset &dataset, Regime regime,
                                                           const WeightParams &params) {
  if (regime == Regime::polygon && dataset.kind() != SiteKind::polygon)
    throw RegimeError("polygon regime requires a polygon dataset");
  if ((regime == Regime::graph || regime == Regime::combined) && dataset.kind() != SiteKind::point)
    throw RegimeError(std::string(to_string(regime)) + " regime requires a point dataset");
  if ((regime == Regime::buffer || regime == Regime::combined) && !(params.radius > 0.0))
    throw RegimeError(std::string(to_string(regime)) + " regime requires a positive radius");

  std::vector<std::vector<std::size_t>> out(dataset.size());
  std::optional<EdgeGraph> graph;
  if (regime == Regime::graph)
    graph.emplace(dataset);
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    switch (regime) {
    case Regime::buffer:
    case Regime::combined:
      out[i] = detail::buffer_indices(dataset, i, params.radius);
      break;
    case Regime::graph:
      out[i] = graph->adjacent(i);
      break;
    case Regime::polygon:
      out[i] = detail::polygon_indices(dataset, i);
      break;
    }
  }
  return out;
}

} // namespace wsod
