#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "wsod/dataset.hpp"
#include "wsod/error.hpp"
#include "wsod/geometry.hpp"
#include "wsod/types.hpp"

namespace wsod::io {

namespace detail {

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

/// Reads non-blank lines with their 1-based numbers.
inline std::vector<std::pair<std::size_t, std::string>> read_lines(std::istream &in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!trim(line).empty())
      out.emplace_back(number, line);
  }
  return out;
}

inline std::ifstream open(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path, 0, "cannot open file");
  return in;
}

} // namespace detail

/// Parses a finite real in plain decimal or exponent notation.
inline std::optional<double> parse_real(std::string_view text) noexcept {
  text = detail::trim(text);
  if (text.empty())
    return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, std::chars_format::general);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    return std::nullopt;
  return v;
}

/// Shortest text that parses back to the same double.
inline std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Fixed six-decimal rendering; values that round to zero print unsigned.
inline std::string format_fixed(double v) {
  if (std::abs(v) < 5e-7)
    v = 0.0;
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  if (ec != std::errc{})
    return format_real(v);
  return std::string(buf, ptr);
}

struct SiteTable {
  std::vector<std::string> attribute_names;
  std::vector<PointSite> sites;
};

/// Header `id,x,y,<attr>...`, one point site per row.
inline SiteTable parse_sites(std::istream &in, const std::string &source = "<sites>") {
  const auto lines = detail::read_lines(in);
  if (lines.empty())
    throw ParseError(source, 0, "missing header");
  const auto header = detail::split(lines[0].second);
  if (header.size() < 3 || header[0] != "id" || header[1] != "x" || header[2] != "y")
    throw ParseError(source, lines[0].first, "header must start with id,x,y");
  SiteTable table;
  std::set<std::string> names;
  for (std::size_t c = 3; c < header.size(); ++c) {
    if (header[c].empty() || !names.insert(header[c]).second)
      throw ParseError(source, lines[0].first, "empty or repeated attribute column '" + header[c] + "'");
    table.attribute_names.push_back(header[c]);
  }
  std::set<std::string> ids;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [number, text] = lines[r];
    const auto fields = detail::split(text);
    if (fields.size() != header.size())
      throw ParseError(source, number,
                       "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    if (fields[0].empty())
      throw ParseError(source, number, "empty id");
    if (!ids.insert(fields[0]).second)
      throw ParseError(source, number, "duplicate id " + fields[0]);
    PointSite site;
    site.id = SiteId(fields[0]);
    const auto x = parse_real(fields[1]);
    const auto y = parse_real(fields[2]);
    if (!x || !y)
      throw ParseError(source, number, "coordinates must be finite decimal numbers");
    site.location = {*x, *y};
    for (std::size_t c = 3; c < fields.size(); ++c) {
      const auto v = parse_real(fields[c]);
      if (!v)
        throw ParseError(source, number, "attribute " + header[c] + " is not a number: '" + fields[c] + "'");
      site.attributes.emplace(header[c], *v);
    }
    table.sites.push_back(std::move(site));
  }
  return table;
}

inline SiteTable load_sites(const std::string &path) {
  auto in = detail::open(path);
  return parse_sites(in, path);
}

/// Header with columns from,to,length,cost in any order; repeated pairs are parallel edges.
inline std::vector<Edge> parse_edges(std::istream &in, const std::string &source = "<edges>") {
  const auto lines = detail::read_lines(in);
  if (lines.empty())
    throw ParseError(source, 0, "missing header");
  const auto header = detail::split(lines[0].second);
  int col_from = -1, col_to = -1, col_len = -1, col_cost = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    int *slot = header[c] == "from"     ? &col_from
                : header[c] == "to"     ? &col_to
                : header[c] == "length" ? &col_len
                : header[c] == "cost"   ? &col_cost
                                        : nullptr;
    if (!slot)
      throw ParseError(source, lines[0].first, "unknown column '" + header[c] + "'");
    if (*slot >= 0)
      throw ParseError(source, lines[0].first, "repeated column '" + header[c] + "'");
    *slot = static_cast<int>(c);
  }
  if (col_from < 0 || col_to < 0 || col_len < 0 || col_cost < 0)
    throw ParseError(source, lines[0].first, "header must contain from,to,length,cost");

  std::vector<Edge> edges;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [number, text] = lines[r];
    const auto fields = detail::split(text);
    if (fields.size() != header.size())
      throw ParseError(source, number,
                       "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    Edge e;
    e.from = SiteId(fields[col_from]);
    e.to = SiteId(fields[col_to]);
    if (e.from.empty() || e.to.empty())
      throw ParseError(source, number, "empty endpoint id");
    if (e.from == e.to)
      throw ParseError(source, number, "edge joins " + e.from.str() + " to itself");
    const auto len = parse_real(fields[col_len]);
    const auto cost = parse_real(fields[col_cost]);
    if (!len || !(*len > 0.0))
      throw ParseError(source, number, "length must be a positive number");
    if (!cost || !(*cost >= 0.0))
      throw ParseError(source, number, "cost must be a non-negative number");
    e.length = *len;
    e.cost = *cost;
    edges.push_back(std::move(e));
  }
  return edges;
}

inline std::vector<Edge> load_edges(const std::string &path) {
  auto in = detail::open(path);
  return parse_edges(in, path);
}

/// JSON list of {"id", "rings": [exterior, holes...], "attributes": {name: number}}.
/// Rings are lists of [x, y]; a repeated closing vertex is dropped.
inline std::vector<PolygonSite> parse_polygons(std::istream &in, const std::string &source = "<polygons>") {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError(source, 0, std::string("malformed document: ") + e.what());
  }
  if (doc.is_object() && doc.contains("polygons"))
    doc = doc["polygons"];
  if (!doc.is_array())
    throw ParseError(source, 0, "expected a list of polygon records");

  std::vector<PolygonSite> out;
  std::set<std::string> ids;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const auto &rec = doc[r];
    const std::string where = "record " + std::to_string(r + 1);
    auto fail = [&](const std::string &what) { return ParseError(source, 0, where + ": " + what); };
    if (!rec.is_object() || !rec.contains("id") || !rec.contains("rings"))
      throw fail("record needs id and rings");
    PolygonSite poly;
    const auto &id = rec["id"];
    if (id.is_string())
      poly.id = SiteId(id.get<std::string>());
    else if (id.is_number_integer())
      poly.id = SiteId(std::to_string(id.get<long long>()));
    else
      throw fail("id must be a string or integer");
    if (poly.id.empty())
      throw fail("empty id");
    if (!ids.insert(poly.id.str()).second)
      throw fail("duplicate id " + poly.id.str());

    const auto &rings = rec["rings"];
    if (!rings.is_array() || rings.empty())
      throw fail("rings must be a non-empty list");
    for (std::size_t k = 0; k < rings.size(); ++k) {
      if (!rings[k].is_array())
        throw fail("ring " + std::to_string(k + 1) + " is not a list");
      Ring ring;
      for (const auto &pt : rings[k]) {
        if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number())
          throw fail("vertices must be [x, y] number pairs");
        ring.push_back({pt[0].get<double>(), pt[1].get<double>()});
      }
      ring = geometry::normalize_ring(std::move(ring));
      if (auto why = geometry::ring_problem(ring); !why.empty())
        throw fail("ring " + std::to_string(k + 1) + ": " + why);
      if (k == 0)
        poly.exterior = std::move(ring);
      else
        poly.holes.push_back(std::move(ring));
    }
    if (rec.contains("attributes")) {
      const auto &attrs = rec["attributes"];
      if (!attrs.is_object())
        throw fail("attributes must be an object");
      for (const auto &[name, value] : attrs.items()) {
        if (!value.is_number())
          throw fail("attribute " + name + " is not a number");
        poly.attributes.emplace(name, value.get<double>());
      }
    }
    out.push_back(std::move(poly));
  }
  return out;
}

inline std::vector<PolygonSite> load_polygons(const std::string &path) {
  auto in = detail::open(path);
  return parse_polygons(in, path);
}

/// Loads a point dataset; edges_path may be empty.
inline SpatialDataset load_point_dataset(const std::string &sites_path, const std::string &edges_path = {}) {
  auto table = load_sites(sites_path);
  std::vector<Edge> edges;
  if (!edges_path.empty())
    edges = load_edges(edges_path);
  return SpatialDataset::from_points(std::move(table.sites), std::move(edges), std::move(table.attribute_names));
}

inline SpatialDataset load_polygon_dataset(const std::string &path) {
  return SpatialDataset::from_polygons(load_polygons(path));
}

// Writers emit the same formats the loaders read, with round-trip number text.

inline void write_sites(std::ostream &out, const SpatialDataset &dataset) {
  out << "id,x,y";
  for (const auto &a : dataset.attribute_names())
    out << ',' << a;
  out << '\n';
  for (const auto &s : dataset.points()) {
    out << s.id << ',' << format_real(s.location.x) << ',' << format_real(s.location.y);
    for (const auto &a : dataset.attribute_names())
      out << ',' << format_real(s.attributes.at(a));
    out << '\n';
  }
}

inline void write_edges(std::ostream &out, const std::vector<Edge> &edges) {
  out << "from,to,length,cost\n";
  for (const auto &e : edges)
    out << e.from << ',' << e.to << ',' << format_real(e.length) << ',' << format_real(e.cost) << '\n';
}

inline void write_polygons(std::ostream &out, const SpatialDataset &dataset) {
  using nlohmann::ordered_json;
  ordered_json doc = ordered_json::array();
  auto ring_json = [](const Ring &ring) {
    ordered_json r = ordered_json::array();
    for (const auto &p : ring)
      r.push_back({p.x, p.y});
    return r;
  };
  for (const auto &p : dataset.polygons()) {
    ordered_json rec;
    rec["id"] = p.id.str();
    rec["rings"] = ordered_json::array({ring_json(p.exterior)});
    for (const auto &h : p.holes)
      rec["rings"].push_back(ring_json(h));
    rec["attributes"] = ordered_json::object();
    for (const auto &[k, v] : p.attributes)
      rec["attributes"][k] = v;
    doc.push_back(std::move(rec));
  }
  out << doc.dump(2) << '\n';
}

/// Writes text to path, replacing any existing file.
inline void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw WriteError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out)
    throw WriteError("failed writing " + path);
}

} // namespace wsod::io
