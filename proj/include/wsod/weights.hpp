#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wsod/error.hpp"
#include "wsod/geometry.hpp"
#include "wsod/neighborhood.hpp"
#include "wsod/types.hpp"

namespace wsod {

struct WeightedNeighbor {
  SiteId neighbor;
  double weight = 0.0;

  friend bool operator==(const WeightedNeighbor &, const WeightedNeighbor &) = default;
};

/// Influence of each neighbor on center. Weights lie in (0, 1] and sum to 1;
/// neighbors whose weight vanished are not listed.
struct WeightedNeighborhood {
  SiteId center;
  std::vector<WeightedNeighbor> entries;

  double sum() const noexcept {
    double s = 0.0;
    for (const auto &e : entries)
      s += e.weight;
    return s;
  }
};

namespace detail {

/// Rescales raw non-negative weights to sum 1 and drops zero entries.
inline WeightedNeighborhood normalize(const SiteId &center, std::span<const SiteId> ids, std::span<const double> raw,
                                      const char *what) {
  double total = 0.0;
  for (double r : raw)
    total += r;
  if (!(total > 0.0) || !std::isfinite(total))
    throw DegenerateFactorError(std::string(what) + ": every factor of " + center.str() + " is degenerate");
  WeightedNeighborhood out{center, {}};
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i] > 0.0)
      out.entries.push_back({ids[i], raw[i] / total});
  return out;
}

inline void require_neighbors(std::span<const NeighborFactors> factors, const char *what) {
  if (factors.empty())
    throw NoNeighborsError(std::string(what) + ": empty neighborhood");
  for (const auto &f : factors)
    if (!(f.distance > 0.0) || !std::isfinite(f.distance))
      throw DegenerateDistanceError(std::string(what) + ": distance to " + f.neighbor.str() + " is not positive");
}

inline std::vector<SiteId> neighbor_ids(std::span<const NeighborFactors> factors) {
  std::vector<SiteId> ids;
  ids.reserve(factors.size());
  for (const auto &f : factors)
    ids.push_back(f.neighbor);
  return ids;
}

/// Inverse-distance shares summing to 1.
inline std::vector<double> distance_shares(std::span<const NeighborFactors> factors) {
  std::vector<double> out(factors.size());
  double total = 0.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out[i] = 1.0 / factors[i].distance;
    total += out[i];
  }
  for (auto &v : out)
    v /= total;
  return out;
}

/// Connection-count shares; all zero when no neighbor is directly connected.
inline std::vector<double> connection_shares(std::span<const NeighborFactors> factors) {
  std::vector<double> out(factors.size(), 0.0);
  double total = 0.0;
  for (const auto &f : factors)
    total += f.connection_count;
  if (total > 0.0)
    for (std::size_t i = 0; i < factors.size(); ++i)
      out[i] = factors[i].connection_count / total;
  return out;
}

/// Inverse-cost shares over reachable neighbors. Zero-cost neighbors take the
/// whole share between them; unreachable ones get nothing.
inline std::vector<double> cost_shares(std::span<const NeighborFactors> factors) {
  std::vector<double> out(factors.size(), 0.0);
  std::size_t free_count = 0;
  for (const auto &f : factors)
    if (f.min_cost && *f.min_cost == 0.0)
      ++free_count;
  if (free_count > 0) {
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (factors[i].min_cost && *factors[i].min_cost == 0.0)
        out[i] = 1.0 / static_cast<double>(free_count);
    return out;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].min_cost) {
      out[i] = 1.0 / *factors[i].min_cost;
      total += out[i];
    }
  }
  if (total > 0.0)
    for (auto &v : out)
      v /= total;
  return out;
}

} // namespace detail

/// Weight proportional to 1/D.
inline WeightedNeighborhood distance_weights(std::span<const NeighborFactors> factors) {
  detail::require_neighbors(factors, "distance_weights");
  const auto ids = detail::neighbor_ids(factors);
  const auto shares = detail::distance_shares(factors);
  return detail::normalize(factors.front().center, ids, shares, "distance_weights");
}

/// Weight proportional to the number of direct connections; unconnected
/// neighbors drop out.
inline WeightedNeighborhood connection_weights(std::span<const NeighborFactors> factors) {
  detail::require_neighbors(factors, "connection_weights");
  const auto ids = detail::neighbor_ids(factors);
  const auto shares = detail::connection_shares(factors);
  return detail::normalize(factors.front().center, ids, shares, "connection_weights");
}

/// alpha * distance share + beta * connection share + delta * cost share,
/// rescaled to sum 1 when a whole term vanished for the neighborhood.
inline WeightedNeighborhood combined_weights(std::span<const NeighborFactors> factors, const WeightParams &params) {
  detail::require_neighbors(factors, "combined_weights");
  if (auto why = params.check(); !why.empty())
    throw Error("combined_weights: " + why);
  const auto ids = detail::neighbor_ids(factors);
  const auto ds = detail::distance_shares(factors);
  const auto rs = detail::connection_shares(factors);
  const auto cs = detail::cost_shares(factors);
  std::vector<double> raw(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    raw[i] = params.alpha * ds[i] + params.beta * rs[i] + params.delta * cs[i];
  return detail::normalize(factors.front().center, ids, raw, "combined_weights");
}

/// One polygon neighbor reduced to what the polygon weighting needs.
struct PolygonNeighborMeasure {
  SiteId neighbor;
  double distance = 0.0; ///< centroid distance to the center
  double area = 0.0;     ///< neighbor area
};

/// gamma * inverse-distance share + (1 - gamma) * area share.
inline WeightedNeighborhood polygon_weights(const SiteId &center, std::span<const PolygonNeighborMeasure> neighbors,
                                            double gamma) {
  if (neighbors.empty())
    throw NoNeighborsError("polygon_weights: empty neighborhood");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw Error("polygon_weights: gamma must lie in [0, 1]");
  double inv_total = 0.0, area_total = 0.0;
  for (const auto &m : neighbors) {
    if (!(m.distance > 0.0))
      throw DegenerateDistanceError("polygon_weights: centroid of " + m.neighbor.str() + " coincides with " +
                                    center.str());
    if (!(m.area > 0.0))
      throw GeometryError("polygon_weights: polygon " + m.neighbor.str() + " has no area");
    inv_total += 1.0 / m.distance;
    area_total += m.area;
  }
  std::vector<SiteId> ids;
  std::vector<double> raw;
  for (const auto &m : neighbors) {
    ids.push_back(m.neighbor);
    raw.push_back(gamma * (1.0 / m.distance) / inv_total + (1.0 - gamma) * m.area / area_total);
  }
  return detail::normalize(center, ids, raw, "polygon_weights");
}

inline WeightedNeighborhood polygon_weights(const PolygonSite &center, std::span<const PolygonSite> neighbors,
                                            double gamma = 0.5) {
  const Point2 c = polygon_centroid(center);
  std::vector<PolygonNeighborMeasure> measures;
  measures.reserve(neighbors.size());
  for (const auto &nb : neighbors)
    measures.push_back({nb.id, distance(c, polygon_centroid(nb)), polygon_area(nb)});
  return polygon_weights(center.id, measures, gamma);
}

namespace detail {

/// Weighted neighborhood of site `center` under a regime; nb must be non-empty
/// and sorted by neighbor id.
inline WeightedNeighborhood regime_weights(const SpatialDataset &dataset, const EdgeGraph &graph, std::size_t center,
                                           const std::vector<std::size_t> &nb, const WeightParams &params,
                                           Regime regime) {
  if (regime == Regime::polygon) {
    std::vector<PolygonNeighborMeasure> measures;
    measures.reserve(nb.size());
    for (auto j : nb)
      measures.push_back({dataset.id_at(j), dataset.distance(center, j), dataset.area(j)});
    return polygon_weights(dataset.id_at(center), measures, params.gamma);
  }
  const auto factors = collect_factors(dataset, graph, center, nb, params.cost_limit);
  return regime == Regime::buffer ? distance_weights(factors) : combined_weights(factors, params);
}

} // namespace detail

/// Weighted neighborhoods of every site with at least one neighbor, in dataset
/// order. Buffer uses inverse distance, graph and combined the three-factor
/// blend, polygon the distance/area mix.
inline std::vector<WeightedNeighborhood> neighborhood_weights(const SpatialDataset &dataset, const WeightParams &params,
                                                              Regime regime) {
  if (auto why = params.check(); !why.empty())
    throw Error("neighborhood_weights: " + why);
  const auto sets = neighbor_sets(dataset, regime, params);
  const EdgeGraph graph(dataset);
  std::vector<WeightedNeighborhood> out;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (sets[i].empty())
      continue;
    auto nb = sets[i];
    std::sort(nb.begin(), nb.end(), [&](std::size_t a, std::size_t b) { return dataset.id_at(a) < dataset.id_at(b); });
    out.push_back(detail::regime_weights(dataset, graph, i, nb, params, regime));
  }
  return out;
}

} // namespace wsod
