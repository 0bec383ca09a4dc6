#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsod {

/// Opaque site identifier. Integer-looking ids order numerically ("9" < "17"),
/// all-digit ids sort before any other token, others order lexicographically.
class SiteId {
public:
  SiteId() = default;
  SiteId(std::string value) : value_(std::move(value)) {}
  SiteId(const char *value) : value_(value) {}

  const std::string &str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  bool is_numeric() const noexcept {
    return !value_.empty() && std::all_of(value_.begin(), value_.end(), [](char c) { return c >= '0' && c <= '9'; });
  }

  friend bool operator==(const SiteId &a, const SiteId &b) noexcept { return a.value_ == b.value_; }

  friend std::strong_ordering operator<=>(const SiteId &a, const SiteId &b) noexcept {
    const bool an = a.is_numeric();
    const bool bn = b.is_numeric();
    if (an != bn)
      return an ? std::strong_ordering::less : std::strong_ordering::greater;
    if (an && a.value_.size() != b.value_.size())
      return a.value_.size() <=> b.value_.size();
    return a.value_.compare(b.value_) <=> 0;
  }

  friend std::ostream &operator<<(std::ostream &os, const SiteId &id) { return os << id.value_; }

private:
  std::string value_;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2 &, const Point2 &) = default;
};

inline double distance(Point2 a, Point2 b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

/// Implicitly closed: the last vertex connects back to the first.
using Ring = std::vector<Point2>;

using AttributeMap = std::map<std::string, double>;

struct PointSite {
  SiteId id;
  Point2 location;
  AttributeMap attributes;

  friend bool operator==(const PointSite &, const PointSite &) = default;
};

struct PolygonSite {
  SiteId id;
  Ring exterior;
  std::vector<Ring> holes;
  AttributeMap attributes;

  friend bool operator==(const PolygonSite &, const PolygonSite &) = default;
};

/// Undirected link. Parallel edges between one pair are allowed and counted.
struct Edge {
  SiteId from;
  SiteId to;
  double length = 1.0;
  double cost = 0.0;

  friend bool operator==(const Edge &, const Edge &) = default;
};

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

struct WeightParams {
  double alpha = 1.0 / 3.0; ///< distance coefficient
  double beta = 1.0 / 3.0;  ///< direct-connection coefficient
  double delta = 1.0 / 3.0; ///< minimal-cost coefficient
  double gamma = 0.5;       ///< polygon mix: 1 is pure distance, 0 is pure area
  double radius = 0.0;      ///< buffer radius; 0 means not set
  double cost_limit = kUnbounded;
  double theta = 2.0;

  static constexpr double kCoefficientTolerance = 1e-9;

  /// Empty when valid, otherwise a description of the first violation.
  std::string check() const {
    auto unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (!unit(alpha) || !unit(beta) || !unit(delta))
      return "alpha, beta and delta must each lie in [0, 1]";
    if (std::abs(alpha + beta + delta - 1.0) > kCoefficientTolerance)
      return "alpha + beta + delta must equal 1";
    if (!unit(gamma))
      return "gamma must lie in [0, 1]";
    if (!(radius >= 0.0) || !std::isfinite(radius))
      return "radius must be a positive real";
    if (!(cost_limit > 0.0))
      return "cost limit must be positive";
    if (!(theta > 0.0) || !std::isfinite(theta))
      return "theta must be a positive real";
    return {};
  }
};

} // namespace wsod

template <> struct std::hash<wsod::SiteId> {
  std::size_t operator()(const wsod::SiteId &id) const noexcept { return std::hash<std::string>{}(id.str()); }
};
