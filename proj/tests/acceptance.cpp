#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "wsod/fixtures.hpp"
#include "wsod/wsod.hpp"

using namespace wsod;

namespace {

constexpr double kDeltaTol = 1e-4;
constexpr double kPctTol = 0.01;
constexpr double kZTol = 0.01;
constexpr double kVillageTol = 0.5;
constexpr double kSumTol = 1e-9;
constexpr double kCornerTol = 1e-12;
constexpr double kUniformTol = 1e-12;
constexpr double kInvariantTol = 1e-9;
constexpr double kGeomTol = 1e-12;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

std::set<std::string> as_set(const std::vector<SiteId> &ids) {
  std::set<std::string> out;
  for (const auto &id : ids)
    out.insert(id.str());
  return out;
}

DetectionResult single(const char *site, double actual, double expected) {
  DetectionResult r;
  r.attribute = "v";
  r.scores.push_back({site, actual, expected, actual - expected, 0.0, false});
  return r;
}

Outcome comparison_arithmetic() {
  Outcome o;
  const auto r = compare_models(single("27", 26.0, 26.19), single("27", 26.0, 26.02));
  const auto &row = r.per_site.at(0);
  o.require(std::abs(row.sq_error_delta - 0.0357) <= kDeltaTol, "delta " + num(row.sq_error_delta));
  o.require(row.improvement_pct && std::abs(*row.improvement_pct - 98.89) <= kPctTol,
            "improvement " + num(row.improvement_pct.value_or(NAN)));
  o.detail = o.ok ? "delta " + num(row.sq_error_delta) + ", improvement " + num(*row.improvement_pct) + "%" : o.detail;
  return o;
}

Outcome figure5_regression() {
  Outcome o;
  WeightParams p;
  p.radius = fixtures::kFigure5Radius;
  p.theta = 2.0;
  const auto d = fixtures::figure5();
  const auto w = detect_outliers(d, fixtures::kFigure5Attribute, p, Mode::weighted, Regime::buffer);
  const auto c = detect_outliers(d, fixtures::kFigure5Attribute, p, Mode::classical, Regime::buffer);
  o.require(as_set(w.outliers()) == std::set<std::string>{"17", "216", "238", "26", "317", "511", "302", "239", "30"},
            "weighted outlier set differs");
  o.require(as_set(c.outliers()) == std::set<std::string>{"17", "216", "238", "26", "317", "28", "29", "30"},
            "classical outlier set differs");
  double worst = 0.0;
  for (const auto &row : fixtures::figure5_reference()) {
    const auto *ws = w.find(row.id);
    const auto *cs = c.find(row.id);
    o.require(ws && cs, "missing score for " + std::string(row.id));
    if (!ws || !cs)
      break;
    worst = std::max({worst, std::abs(ws->z - row.weighted), std::abs(cs->z - row.classical)});
  }
  o.require(worst <= kZTol, "max z deviation " + num(worst));
  if (o.ok)
    o.detail = std::to_string(d.size()) + " sites, max z deviation " + num(worst);
  return o;
}

Outcome village27() {
  Outcome o;
  const auto d = fixtures::village27();
  WeightParams p;
  p.radius = fixtures::kVillage27Radius;
  const auto c = detect_outliers(d, fixtures::kVillage27Attribute, p, Mode::classical, Regime::buffer);
  const auto w = detect_outliers(d, fixtures::kVillage27Attribute, p, Mode::weighted, Regime::buffer);
  const auto *cs = c.find("27");
  const auto *ws = w.find("27");
  o.require(cs && ws, "site 27 not scored");
  if (!o.ok)
    return o;
  o.require(std::abs(cs->expected - 45.0) <= kVillageTol, "classical expectation " + num(cs->expected));
  o.require(std::abs(ws->expected - 28.0) <= kVillageTol, "weighted expectation " + num(ws->expected));
  o.require(std::abs(std::abs(cs->diff) - 19.0) <= kVillageTol, "classical |S| " + num(cs->diff));
  o.require(std::abs(std::abs(ws->diff) - 2.0) <= kVillageTol, "weighted |S| " + num(ws->diff));
  // per-site improvement on the raw differences of site 27
  const auto r = compare_models(single("27", cs->actual, cs->expected), single("27", ws->actual, ws->expected));
  const double pct = r.per_site.at(0).improvement_pct.value_or(NAN);
  o.require(std::abs(pct - 98.89) <= kPctTol, "improvement " + num(pct));
  if (o.ok)
    o.detail = "E " + num(cs->expected) + " vs " + num(ws->expected) + ", improvement " + num(pct) + "%";
  return o;
}

Outcome figure2_neighbors() {
  Outcome o;
  const auto d = fixtures::figure2();
  const auto buf = as_set(buffer_neighbors(d, "A", fixtures::kFigure2Radius));
  const auto gr = as_set(graph_neighbors(d, "A"));
  o.require(buf == std::set<std::string>{"B", "K", "J", "H"}, "buffer set differs");
  o.require(gr == std::set<std::string>{"B", "D", "E"}, "graph set differs");
  if (o.ok)
    o.detail = "buffer {B,H,J,K}, graph {B,D,E}";
  return o;
}

void check_normalized(Outcome &o, const WeightedNeighborhood &w, const char *what) {
  double sum = 0.0;
  for (const auto &e : w.entries) {
    o.require(e.weight > 0.0 && e.weight <= 1.0, std::string(what) + " weight outside (0,1]: " + num(e.weight));
    sum += e.weight;
  }
  o.require(std::abs(sum - 1.0) <= kSumTol, std::string(what) + " sum " + num(sum));
}

void check_same(Outcome &o, const WeightedNeighborhood &a, const WeightedNeighborhood &b, const char *what) {
  o.require(a.entries.size() == b.entries.size(), std::string(what) + " sizes differ");
  if (a.entries.size() != b.entries.size())
    return;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    o.require(a.entries[i].neighbor == b.entries[i].neighbor, std::string(what) + " neighbor order differs");
    o.require(std::abs(a.entries[i].weight - b.entries[i].weight) <= kCornerTol,
              std::string(what) + " entry differs by " + num(std::abs(a.entries[i].weight - b.entries[i].weight)));
  }
}

Outcome weight_normalization() {
  Outcome o;
  std::mt19937 rng(wsod::testing::kSeed);
  std::uniform_int_distribution<int> size(1, 20), count(0, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // (0, 100]: 100 * (1 - u) with u in [0, 1)
  auto positive = [&] { return 100.0 * (1.0 - unit(rng)); };
  const int lists = 1000;
  int connection_lists = 0;
  for (int it = 0; it < lists && o.ok; ++it) {
    const int n = size(rng);
    std::vector<NeighborFactors> f;
    std::vector<PolygonNeighborMeasure> m;
    bool any_count = false;
    for (int i = 0; i < n; ++i) {
      NeighborFactors x{"c", SiteId("n" + std::to_string(i)), positive(), static_cast<unsigned>(count(rng)), {}};
      if (unit(rng) < 0.8)
        x.min_cost = positive();
      any_count = any_count || x.connection_count > 0;
      f.push_back(x);
      m.push_back({x.neighbor, x.distance, positive()});
    }
    WeightParams p;
    p.alpha = 0.05 + 0.9 * unit(rng);
    p.beta = (1.0 - p.alpha) * unit(rng);
    p.delta = 1.0 - p.alpha - p.beta;
    check_normalized(o, distance_weights(f), "distance");
    check_normalized(o, combined_weights(f, p), "combined");
    check_normalized(o, polygon_weights("c", m, unit(rng)), "polygon");
    WeightParams dist_corner, conn_corner;
    dist_corner.alpha = 1.0;
    dist_corner.beta = dist_corner.delta = 0.0;
    conn_corner.beta = 1.0;
    conn_corner.alpha = conn_corner.delta = 0.0;
    check_same(o, combined_weights(f, dist_corner), distance_weights(f), "corner (1,0,0)");
    if (any_count) {
      ++connection_lists;
      check_normalized(o, connection_weights(f), "connection");
      check_same(o, combined_weights(f, conn_corner), connection_weights(f), "corner (0,1,0)");
    }
  }
  if (o.ok)
    o.detail = std::to_string(lists) + " lists, " + std::to_string(connection_lists) + " with connections";
  return o;
}

Outcome uniform_equivalence() {
  Outcome o;
  std::mt19937 rng(wsod::testing::kSeed + 1);
  std::uniform_int_distribution<int> cycles(2, 5), length(3, 8), multiplicity(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int datasets = 100;
  int compared = 0;
  for (int it = 0; it < datasets && o.ok; ++it) {
    // disjoint regular cycles: each site sees two neighbors with the same
    // distance, connection count and cost
    std::vector<PointSite> sites;
    std::vector<Edge> edges;
    const int k = cycles(rng);
    for (int c = 0; c < k; ++c) {
      const int n = length(rng);
      const int mult = multiplicity(rng);
      const double cost = 0.5 + 5.0 * unit(rng);
      const double radius = 1.0 + 3.0 * unit(rng);
      const std::size_t first = sites.size();
      for (int i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * i / n;
        sites.push_back({SiteId("c" + std::to_string(c) + "_" + std::to_string(i)),
                         {100.0 * c + radius * std::cos(a), radius * std::sin(a)},
                         {{"v", 100.0 * unit(rng)}}});
      }
      for (int i = 0; i < n; ++i)
        for (int r = 0; r < mult; ++r)
          edges.push_back({sites[first + i].id, sites[first + (i + 1) % n].id, 1.0, cost});
    }
    const auto d = SpatialDataset::from_points(sites, edges);
    WeightParams p;
    const auto w = detect_outliers(d, "v", p, Mode::weighted, Regime::graph);
    const auto c = detect_outliers(d, "v", p, Mode::classical, Regime::graph);
    o.require(w.scores.size() == c.scores.size(), "score counts differ");
    for (std::size_t i = 0; i < w.scores.size() && o.ok; ++i)
      o.require(std::abs(w.scores[i].z - c.scores[i].z) <= kUniformTol,
                "z differs by " + num(std::abs(w.scores[i].z - c.scores[i].z)));
    o.require(w.outliers() == c.outliers(), "outlier sets differ");
    ++compared;
  }
  if (o.ok)
    o.detail = std::to_string(compared) + " datasets";
  return o;
}

Outcome shortest_path_oracle() {
  Outcome o;
  std::mt19937 rng(wsod::testing::kSeed + 2);
  std::uniform_real_distribution<double> limit(0.0, 15.0);
  const int graphs = 500;
  int pairs = 0, unreachable = 0, over_limit = 0;
  for (int it = 0; it < graphs && o.ok; ++it) {
    const auto g = wsod::testing::random_graph(rng);
    const auto d = g.dataset();
    const double lim = it % 2 ? limit(rng) : kUnbounded;
    for (int a = 0; a < g.nodes; ++a)
      for (int b = 0; b < g.nodes; ++b) {
        const double want = wsod::testing::brute_force_min_cost(g.nodes, g.edges, a, b, lim);
        const auto got = min_cost(d, d.id_at(a), d.id_at(b), lim);
        ++pairs;
        if (want < 0.0) {
          if (wsod::testing::brute_force_min_cost(g.nodes, g.edges, a, b, kUnbounded) < 0.0)
            ++unreachable;
          else
            ++over_limit;
          o.require(!got, "expected no path between " + std::to_string(a) + " and " + std::to_string(b));
        } else {
          o.require(got && std::abs(*got - want) <= 1e-9 * std::max(1.0, want),
                    "cost " + num(got.value_or(-1)) + " vs " + num(want));
        }
      }
  }
  o.require(unreachable > 0 && over_limit > 0, "missing unreachable or over-limit cases");
  if (o.ok)
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " pairs (" +
               std::to_string(unreachable) + " unreachable, " + std::to_string(over_limit) + " over limit)";
  return o;
}

Outcome z_invariants() {
  Outcome o;
  std::mt19937 rng(wsod::testing::kSeed + 3);
  std::uniform_real_distribution<double> coord(0.0, 20.0), value(0.0, 100.0), unit(0.0, 1.0);
  std::uniform_int_distribution<int> size(10, 80);
  const int datasets = 200;
  int transforms = 0;
  for (int it = 0; it < datasets && o.ok; ++it) {
    std::vector<PointSite> sites;
    const int n = size(rng);
    for (int i = 0; i < n; ++i)
      sites.push_back({SiteId(std::to_string(i)), {coord(rng), coord(rng)}, {{"f", value(rng)}}});
    WeightParams p;
    p.radius = 3.0 + 5.0 * unit(rng);
    const Mode mode = it % 2 ? Mode::weighted : Mode::classical;
    DetectionResult ref;
    try {
      ref = detect_outliers(SpatialDataset::from_points(sites), "f", p, mode, Regime::buffer);
    } catch (const DegenerateDistributionError &) {
      continue;
    }
    double mean = 0.0, sq = 0.0;
    for (const auto &s : ref.scores)
      mean += s.z;
    mean /= ref.scores.size();
    for (const auto &s : ref.scores)
      sq += (s.z - mean) * (s.z - mean);
    const double sd = std::sqrt(sq / ref.scores.size());
    o.require(std::abs(mean) <= kInvariantTol, "mean z " + num(mean));
    o.require(std::abs(sd - 1.0) <= kInvariantTol, "std z " + num(sd));
    for (int t = 0; t < 3 && o.ok; ++t) {
      const double a = std::exp(8.0 * unit(rng) - 4.0), b = 2000.0 * unit(rng) - 1000.0;
      auto moved = sites;
      for (auto &s : moved)
        s.attributes["f"] = a * s.attributes["f"] + b;
      const auto r = detect_outliers(SpatialDataset::from_points(moved), "f", p, mode, Regime::buffer);
      o.require(r.outliers() == ref.outliers(), "flagged set changed under a=" + num(a) + " b=" + num(b));
      ++transforms;
    }
  }
  if (o.ok)
    o.detail = std::to_string(datasets) + " datasets, " + std::to_string(transforms) + " affine transforms";
  return o;
}

Outcome polygon_suite() {
  Outcome o;
  const auto grid = fixtures::polygon_grid();
  const auto center = polygon_adjacent_neighbors(grid, "r1c1");
  o.require(as_set(center) == std::set<std::string>{"r0c1", "r1c0", "r1c2", "r2c1"}, "center adjacency differs");
  o.require(polygon_adjacent_neighbors(grid, "r0c0").size() == 2, "corner adjacency differs");

  const auto square = wsod::testing::square("sq", 0, 0);
  const PolygonSite tri{"tri", {{0, 0}, {3, 0}, {0, 4}}, {}, {}};
  const auto sc = polygon_centroid(square);
  const auto tc = polygon_centroid(tri);
  o.require(std::abs(polygon_area(square) - 1.0) <= kGeomTol, "unit square area " + num(polygon_area(square)));
  o.require(std::abs(sc.x - 0.5) <= kGeomTol && std::abs(sc.y - 0.5) <= kGeomTol, "unit square centroid");
  o.require(std::abs(polygon_area(tri) - 6.0) <= kGeomTol, "triangle area " + num(polygon_area(tri)));
  o.require(std::abs(tc.x - 1.0) <= kGeomTol && std::abs(tc.y - 4.0 / 3.0) <= kGeomTol, "triangle centroid");

  const std::vector<PolygonSite> nbs{wsod::testing::square("a", 1, 0), wsod::testing::square("b", 0, 1, 2.0),
                                     wsod::testing::square("c", -3, 0, 3.0)};
  const auto by_distance = polygon_weights(square, nbs, 1.0);
  const auto by_area = polygon_weights(square, nbs, 0.0);
  double inv = 0.0, area = 0.0;
  for (const auto &nb : nbs) {
    inv += 1.0 / distance(sc, polygon_centroid(nb));
    area += polygon_area(nb);
  }
  for (std::size_t i = 0; i < nbs.size(); ++i) {
    const double wd = (1.0 / distance(sc, polygon_centroid(nbs[i]))) / inv;
    const double wa = polygon_area(nbs[i]) / area;
    o.require(std::abs(by_distance.entries[i].weight - wd) <= kGeomTol, "gamma=1 weight differs");
    o.require(std::abs(by_area.entries[i].weight - wa) <= kGeomTol, "gamma=0 weight differs");
  }
  if (o.ok)
    o.detail = "grid adjacency, area/centroid cases, gamma reductions";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"comparison arithmetic", comparison_arithmetic},
      {"figure-5 regression", figure5_regression},
      {"village-27 reconstruction", village27},
      {"figure-2 neighbor semantics", figure2_neighbors},
      {"weight normalization", weight_normalization},
      {"uniform-weight equivalence", uniform_equivalence},
      {"shortest-path oracle", shortest_path_oracle},
      {"z-score invariants", z_invariants},
      {"polygon suite", polygon_suite},
  };
  int failed = 0;
  int index = 0;
  for (const auto &[name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s (%.0f ms)\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str(), ms);
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
