#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsod/error.hpp"
#include "wsod/geometry.hpp"
#include "wsod/types.hpp"

namespace wsod {

enum class SiteKind { point, polygon };

/// Sites of one kind, the edge multigraph between them (point kind only), and
/// the declared attribute names. Immutable after construction.
class SpatialDataset {
public:
  SpatialDataset() = default;

  /// An empty attribute_names list declares the union of all attribute keys.
  static SpatialDataset from_points(std::vector<PointSite> sites, std::vector<Edge> edges = {},
                                    std::vector<std::string> attribute_names = {}) {
    SpatialDataset d;
    d.kind_ = SiteKind::point;
    d.points_ = std::move(sites);
    d.edges_ = std::move(edges);
    d.attribute_names_ = std::move(attribute_names);
    d.index();
    return d;
  }

  static SpatialDataset from_polygons(std::vector<PolygonSite> sites, std::vector<std::string> attribute_names = {}) {
    SpatialDataset d;
    d.kind_ = SiteKind::polygon;
    d.polygons_ = std::move(sites);
    for (auto &p : d.polygons_) {
      p.exterior = geometry::normalize_ring(std::move(p.exterior));
      for (auto &h : p.holes)
        h = geometry::normalize_ring(std::move(h));
    }
    d.attribute_names_ = std::move(attribute_names);
    d.index();
    return d;
  }

  SiteKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  const std::vector<PointSite> &points() const noexcept { return points_; }
  const std::vector<PolygonSite> &polygons() const noexcept { return polygons_; }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  const std::vector<std::string> &attribute_names() const noexcept { return attribute_names_; }
  const std::vector<SiteId> &ids() const noexcept { return ids_; }
  const SiteId &id_at(std::size_t i) const { return ids_.at(i); }

  bool has_attribute(std::string_view name) const {
    for (const auto &a : attribute_names_)
      if (a == name)
        return true;
    return false;
  }

  std::optional<std::size_t> find(const SiteId &id) const {
    if (auto it = by_id_.find(id); it != by_id_.end())
      return it->second;
    return std::nullopt;
  }

  std::size_t index_of(const SiteId &id) const {
    if (auto i = find(id))
      return *i;
    throw LookupError("unknown site id " + id.str());
  }

  const AttributeMap &attributes(std::size_t i) const {
    return kind_ == SiteKind::point ? points_.at(i).attributes : polygons_.at(i).attributes;
  }

  double value(std::size_t i, const std::string &attribute) const {
    const auto &attrs = attributes(i);
    if (auto it = attrs.find(attribute); it != attrs.end())
      return it->second;
    throw LookupError("site " + ids_.at(i).str() + " has no value for attribute " + attribute);
  }

  /// Point coordinates, or the area centroid for polygons.
  Point2 location(std::size_t i) const {
    if (kind_ == SiteKind::point)
      return points_.at(i).location;
    if (!centroids_.at(i))
      throw GeometryError("polygon " + ids_[i].str() + " is degenerate");
    return *centroids_[i];
  }

  double area(std::size_t i) const {
    if (kind_ == SiteKind::point || !areas_.at(i))
      throw GeometryError("site " + ids_.at(i).str() + " has no area");
    return *areas_[i];
  }

  double distance(std::size_t i, std::size_t j) const {
    const double d = wsod::distance(location(i), location(j));
    if (!(d > 0.0))
      throw DegenerateDistanceError("sites " + ids_[i].str() + " and " + ids_[j].str() + " are coincident");
    return d;
  }

private:
  void index() {
    const std::size_t n = kind_ == SiteKind::point ? points_.size() : polygons_.size();
    ids_.clear();
    ids_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids_.push_back(kind_ == SiteKind::point ? points_[i].id : polygons_[i].id);
      by_id_.emplace(ids_.back(), i);
    }
    if (attribute_names_.empty()) {
      std::set<std::string> names;
      for (std::size_t i = 0; i < n; ++i)
        for (const auto &[k, v] : attributes(i))
          names.insert(k);
      attribute_names_.assign(names.begin(), names.end());
    }
    if (kind_ == SiteKind::polygon) {
      centroids_.resize(n);
      areas_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        try {
          areas_[i] = polygon_area(polygons_[i]);
          centroids_[i] = polygon_centroid(polygons_[i]);
        } catch (const GeometryError &) {
          // reported by validate_dataset
        }
      }
    }
  }

  SiteKind kind_ = SiteKind::point;
  std::vector<PointSite> points_;
  std::vector<PolygonSite> polygons_;
  std::vector<Edge> edges_;
  std::vector<std::string> attribute_names_;
  std::vector<SiteId> ids_;
  std::unordered_map<SiteId, std::size_t> by_id_;
  std::vector<std::optional<Point2>> centroids_;
  std::vector<std::optional<double>> areas_;
};

struct Violation {
  enum class Kind {
    empty_id,
    duplicate_id,
    non_finite_coordinate,
    coincident_sites,
    degenerate_ring,
    missing_attribute,
    non_finite_attribute,
    dangling_endpoint,
    self_loop,
    bad_length,
    bad_cost,
    edges_on_polygons,
  };

  Kind kind;
  std::string message;

  friend bool operator==(const Violation &, const Violation &) = default;
};

/// Every invariant violation in the dataset; empty when all downstream
/// preconditions hold.
inline std::vector<Violation> validate_dataset(const SpatialDataset &dataset) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  const auto &ids = dataset.ids();
  const std::size_t n = ids.size();

  std::unordered_map<SiteId, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (ids[i].empty())
      out.push_back({K::empty_id, "site #" + std::to_string(i + 1) + " has an empty id"});
    else if (!seen.emplace(ids[i], i).second)
      out.push_back({K::duplicate_id, "duplicate site id " + ids[i].str()});
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto &attrs = dataset.attributes(i);
    for (const auto &name : dataset.attribute_names()) {
      auto it = attrs.find(name);
      if (it == attrs.end())
        out.push_back({K::missing_attribute, "site " + ids[i].str() + " is missing attribute " + name});
      else if (!std::isfinite(it->second))
        out.push_back({K::non_finite_attribute, "site " + ids[i].str() + " has non-finite " + name});
    }
  }

  std::vector<bool> placed(n, false);
  if (dataset.kind() == SiteKind::point) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = dataset.points()[i].location;
      placed[i] = std::isfinite(p.x) && std::isfinite(p.y);
      if (!placed[i])
        out.push_back({K::non_finite_coordinate, "site " + ids[i].str() + " has non-finite coordinates"});
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const auto &poly = dataset.polygons()[i];
      placed[i] = true;
      if (auto why = geometry::ring_problem(poly.exterior); !why.empty()) {
        out.push_back({K::degenerate_ring, "site " + ids[i].str() + ": exterior " + why});
        placed[i] = false;
      }
      for (const auto &h : poly.holes) {
        if (auto why = geometry::ring_problem(h); !why.empty()) {
          out.push_back({K::degenerate_ring, "site " + ids[i].str() + ": hole " + why});
          placed[i] = false;
        }
      }
      if (placed[i]) {
        try {
          (void)dataset.location(i);
        } catch (const GeometryError &e) {
          out.push_back({K::degenerate_ring, "site " + ids[i].str() + ": " + e.what()});
          placed[i] = false;
        }
      }
    }
    if (!dataset.edges().empty())
      out.push_back({K::edges_on_polygons, "edges are only supported on point datasets"});
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (placed[i] && placed[j] && dataset.location(i) == dataset.location(j))
        out.push_back({K::coincident_sites, "coincident sites " + ids[i].str() + " and " + ids[j].str()});

  for (std::size_t e = 0; e < dataset.edges().size(); ++e) {
    const auto &edge = dataset.edges()[e];
    const std::string tag = "edge #" + std::to_string(e + 1) + " (" + edge.from.str() + "-" + edge.to.str() + ")";
    for (const auto *end : {&edge.from, &edge.to})
      if (!dataset.find(*end))
        out.push_back({K::dangling_endpoint, tag + ": dangling endpoint " + end->str()});
    if (edge.from == edge.to)
      out.push_back({K::self_loop, tag + ": from equals to"});
    if (!(edge.length > 0.0) || !std::isfinite(edge.length))
      out.push_back({K::bad_length, tag + ": length must be positive"});
    if (!(edge.cost >= 0.0) || !std::isfinite(edge.cost))
      out.push_back({K::bad_cost, tag + ": cost must be non-negative"});
  }
  return out;
}

} // namespace wsod
