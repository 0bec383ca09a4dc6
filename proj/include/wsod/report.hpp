#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wsod/dataset.hpp"
#include "wsod/detect.hpp"
#include "wsod/io.hpp"
#include "wsod/neighborhood.hpp"
#include "wsod/weights.hpp"

namespace wsod::io {

enum class Format { csv, json };

inline std::optional<Format> parse_format(std::string_view s) noexcept {
  if (s == "csv")
    return Format::csv;
  if (s == "json")
    return Format::json;
  return std::nullopt;
}

namespace detail {

inline double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

inline std::string joined(const std::vector<SiteId> &ids, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i)
      out += sep;
    out += ids[i].str();
  }
  return out;
}

inline nlohmann::ordered_json id_list(const std::vector<SiteId> &ids) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto &id : ids)
    arr.push_back(id.str());
  return arr;
}

} // namespace detail

/// Scores ordered by signed z ascending, ties by site id.
inline std::vector<SiteScore> sorted_by_z(const DetectionResult &result) {
  auto rows = result.scores;
  std::stable_sort(rows.begin(), rows.end(), [](const SiteScore &a, const SiteScore &b) {
    if (a.z != b.z)
      return a.z < b.z;
    return a.site < b.site;
  });
  return rows;
}

inline std::string render_report(const DetectionResult &result, Format format) {
  const auto rows = sorted_by_z(result);
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["attribute"] = result.attribute;
    doc["mode"] = std::string(to_string(result.mode));
    doc["regime"] = std::string(to_string(result.regime));
    doc["mu"] = detail::round6(result.mu);
    doc["sigma"] = detail::round6(result.sigma);
    doc["theta"] = detail::round6(result.theta);
    auto scores = nlohmann::ordered_json::array();
    for (const auto &s : rows)
      scores.push_back({{"site_id", s.site.str()},
                        {"actual", detail::round6(s.actual)},
                        {"expected", detail::round6(s.expected)},
                        {"diff", detail::round6(s.diff)},
                        {"z", detail::round6(s.z)},
                        {"outlier", s.is_outlier}});
    doc["scores"] = std::move(scores);
    doc["skipped"] = detail::id_list(result.skipped);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "site_id,actual,expected,diff,z,outlier\n";
  for (const auto &s : rows)
    out << s.site << ',' << format_fixed(s.actual) << ',' << format_fixed(s.expected) << ','
        << format_fixed(s.diff) << ',' << format_fixed(s.z) << ',' << (s.is_outlier ? "true" : "false") << '\n';
  out << "# mu: " << format_fixed(result.mu) << '\n';
  out << "# sigma: " << format_fixed(result.sigma) << '\n';
  out << "# theta: " << format_fixed(result.theta) << '\n';
  out << "# skipped: " << detail::joined(result.skipped, ' ') << '\n';
  return out.str();
}

/// Rows ordered by site id.
inline std::string render_report(const ComparisonReport &report, Format format) {
  auto rows = report.per_site;
  std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) { return a.site < b.site; });
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["attribute"] = report.attribute;
    doc["mean_improvement_pct"] = detail::round6(report.mean_improvement_pct);
    doc["mean_sq_error_reduction_pct"] = detail::round6(report.mean_sq_error_reduction_pct);
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
      nlohmann::ordered_json j{{"site_id", r.site.str()},
                               {"actual", detail::round6(r.actual)},
                               {"expected_classical", detail::round6(r.expected_classical)},
                               {"expected_weighted", detail::round6(r.expected_weighted)},
                               {"sq_error_classical", detail::round6(r.sq_error_classical)},
                               {"sq_error_weighted", detail::round6(r.sq_error_weighted)},
                               {"sq_error_delta", detail::round6(r.sq_error_delta)}};
      j["improvement_pct"] = r.improvement_pct ? nlohmann::ordered_json(detail::round6(*r.improvement_pct)) : nullptr;
      arr.push_back(std::move(j));
    }
    doc["per_site"] = std::move(arr);
    doc["skipped"] = detail::id_list(report.skipped);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "site_id,actual,expected_classical,expected_weighted,sq_error_classical,sq_error_weighted,sq_error_delta,"
         "improvement_pct\n";
  for (const auto &r : rows)
    out << r.site << ',' << format_fixed(r.actual) << ',' << format_fixed(r.expected_classical) << ','
        << format_fixed(r.expected_weighted) << ',' << format_fixed(r.sq_error_classical) << ','
        << format_fixed(r.sq_error_weighted) << ',' << format_fixed(r.sq_error_delta) << ','
        << (r.improvement_pct ? format_fixed(*r.improvement_pct) : std::string()) << '\n';
  out << "# mean_improvement_pct: " << format_fixed(report.mean_improvement_pct) << '\n';
  out << "# mean_sq_error_reduction_pct: " << format_fixed(report.mean_sq_error_reduction_pct) << '\n';
  out << "# skipped: " << detail::joined(report.skipped, ' ') << '\n';
  return out.str();
}

/// Writes a detection or comparison report to path in the given format.
template <typename Report> void write_report(const Report &report, Format format, const std::string &path) {
  write_file(path, render_report(report, format));
}

/// One row per site: `site_id,neighbors` with neighbor ids joined by ';'.
inline std::string render_neighbors(const SpatialDataset &dataset, const std::vector<std::vector<std::size_t>> &sets,
                                    Format format) {
  auto ids_of = [&](const std::vector<std::size_t> &set) {
    std::vector<SiteId> ids;
    for (auto j : set)
      ids.push_back(dataset.id_at(j));
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  if (format == Format::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < dataset.size(); ++i)
      doc[dataset.id_at(i).str()] = detail::id_list(ids_of(sets[i]));
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "site_id,neighbors\n";
  for (std::size_t i = 0; i < dataset.size(); ++i)
    out << dataset.id_at(i) << ',' << detail::joined(ids_of(sets[i]), ';') << '\n';
  return out.str();
}

inline std::string render_weights(const std::vector<WeightedNeighborhood> &neighborhoods, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto &wn : neighborhoods) {
      nlohmann::ordered_json entries = nlohmann::ordered_json::object();
      for (const auto &e : wn.entries)
        entries[e.neighbor.str()] = detail::round6(e.weight);
      doc[wn.center.str()] = std::move(entries);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "site_id,neighbor_id,weight\n";
  for (const auto &wn : neighborhoods)
    for (const auto &e : wn.entries)
      out << wn.center << ',' << e.neighbor << ',' << format_fixed(e.weight) << '\n';
  return out.str();
}

} // namespace wsod::io
