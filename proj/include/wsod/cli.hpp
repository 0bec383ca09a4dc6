#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsod/dataset.hpp"
#include "wsod/detect.hpp"
#include "wsod/error.hpp"
#include "wsod/fixtures.hpp"
#include "wsod/io.hpp"
#include "wsod/neighborhood.hpp"
#include "wsod/report.hpp"
#include "wsod/weights.hpp"

namespace wsod::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

/// Raised for inconsistent flag combinations that CLI11 cannot express.
class UsageError : public Error {
public:
  using Error::Error;
};

struct RunConfig {
  std::string sites;
  std::string edges;
  std::string polygons;
  std::string attribute;
  WeightParams params;
  std::optional<double> alpha, beta, delta;
  std::string mode = "weighted";
  std::string regime;
  std::string out;
  std::string format = "csv";
};

namespace detail {

inline void add_input_options(CLI::App &sub, RunConfig &cfg) {
  sub.add_option("--sites", cfg.sites, "Point sites file (id,x,y,<attr>...)");
  sub.add_option("--edges", cfg.edges, "Edges file (from,to,length,cost)");
  sub.add_option("--polygons", cfg.polygons, "Polygon records (JSON)");
}

inline void add_run_options(CLI::App &sub, RunConfig &cfg, bool with_attribute) {
  add_input_options(sub, cfg);
  if (with_attribute)
    sub.add_option("--attribute", cfg.attribute, "Attribute to test")->required();
  sub.add_option("--radius", cfg.params.radius, "Buffer radius")->check(CLI::PositiveNumber);
  sub.add_option("--alpha", cfg.alpha, "Distance coefficient")->check(CLI::Range(0.0, 1.0));
  sub.add_option("--beta", cfg.beta, "Direct-connection coefficient")->check(CLI::Range(0.0, 1.0));
  sub.add_option("--delta", cfg.delta, "Minimal-cost coefficient")->check(CLI::Range(0.0, 1.0));
  sub.add_option("--gamma", cfg.params.gamma, "Polygon distance/area mix (default 0.5)")->check(CLI::Range(0.0, 1.0));
  sub.add_option("--cost-limit", cfg.params.cost_limit, "Ignore paths costing more than this")
      ->check(CLI::PositiveNumber);
  sub.add_option("--theta", cfg.params.theta, "Outlier threshold on |z| (default 2)")->check(CLI::PositiveNumber);
  sub.add_option("--regime", cfg.regime, "buffer | graph | polygon | combined")
      ->check(CLI::IsMember({"buffer", "graph", "polygon", "combined"}));
  sub.add_option("--out", cfg.out, "Output file (default stdout)");
  sub.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

/// Fills alpha/beta/delta: unspecified coefficients share what is left of 1.
inline void resolve_coefficients(RunConfig &cfg) {
  if (!cfg.alpha && !cfg.beta && !cfg.delta)
    return;
  double given = 0.0;
  int missing = 0;
  for (const auto &c : {cfg.alpha, cfg.beta, cfg.delta}) {
    if (c)
      given += *c;
    else
      ++missing;
  }
  const double rest = missing ? (1.0 - given) / missing : 0.0;
  cfg.params.alpha = cfg.alpha.value_or(rest);
  cfg.params.beta = cfg.beta.value_or(rest);
  cfg.params.delta = cfg.delta.value_or(rest);
  if (auto why = cfg.params.check(); !why.empty())
    throw UsageError(why);
}

inline SpatialDataset load(const RunConfig &cfg) {
  const bool points = !cfg.sites.empty();
  const bool polys = !cfg.polygons.empty();
  if (points == polys)
    throw UsageError("give exactly one of --sites or --polygons");
  if (polys && !cfg.edges.empty())
    throw UsageError("--edges only applies to --sites");
  return points ? io::load_point_dataset(cfg.sites, cfg.edges) : io::load_polygon_dataset(cfg.polygons);
}

inline Regime regime_for(const RunConfig &cfg, const SpatialDataset &dataset) {
  const Regime r = cfg.regime.empty() ? default_regime(dataset) : *parse_regime(cfg.regime);
  if ((r == Regime::polygon) != (dataset.kind() == SiteKind::polygon) && r != Regime::buffer)
    throw UsageError("regime " + std::string(to_string(r)) + " does not fit a " +
                     (dataset.kind() == SiteKind::polygon ? "polygon" : "point") + " dataset");
  if ((r == Regime::buffer || r == Regime::combined) && !(cfg.params.radius > 0.0))
    throw UsageError("regime " + std::string(to_string(r)) + " needs --radius");
  return r;
}

/// Loads and validates; violations go to err and make the run fail.
inline std::optional<SpatialDataset> load_valid(const RunConfig &cfg, std::ostream &err) {
  auto dataset = load(cfg);
  const auto violations = validate_dataset(dataset);
  if (!violations.empty()) {
    for (const auto &v : violations)
      err << "invalid: " << v.message << '\n';
    return std::nullopt;
  }
  return dataset;
}

inline void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
  if (cfg.out.empty())
    out << text;
  else
    io::write_file(cfg.out, text);
}

inline int write_fixtures(const std::string &dir, std::ostream &out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw WriteError("cannot create " + dir + ": " + ec.message());
  auto path = [&](const char *name) { return (fs::path(dir) / name).string(); };
  auto sites = [](const SpatialDataset &d) {
    std::ostringstream s;
    io::write_sites(s, d);
    return s.str();
  };
  const auto fig2 = fixtures::figure2();
  std::ostringstream edges, grid;
  io::write_edges(edges, fig2.edges());
  io::write_polygons(grid, fixtures::polygon_grid());
  const std::vector<std::pair<std::string, std::string>> files{
      {path("figure2-sites.csv"), sites(fig2)},
      {path("figure2-edges.csv"), edges.str()},
      {path("figure5-sites.csv"), sites(fixtures::figure5())},
      {path("village27-sites.csv"), sites(fixtures::village27())},
      {path("grid-polygons.json"), grid.str()},
  };
  for (const auto &[p, text] : files) {
    io::write_file(p, text);
    out << p << '\n';
  }
  return kOk;
}

} // namespace detail

/// Entry point of the `wsod` command. Returns the process exit status.
inline int run_cli(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  CLI::App app{"Weighted spatial outlier detection"};
  app.name("wsod");
  app.require_subcommand(1);
  RunConfig cfg;
  std::string fixtures_dir = ".";

  auto *validate = app.add_subcommand("validate", "Check a dataset for invariant violations");
  detail::add_input_options(*validate, cfg);
  auto *neighbors = app.add_subcommand("neighbors", "Print the neighbor set of every site");
  detail::add_run_options(*neighbors, cfg, false);
  auto *weights = app.add_subcommand("weights", "Print the weighted neighborhood of every site");
  detail::add_run_options(*weights, cfg, false);
  auto *detect = app.add_subcommand("detect", "Score every site and flag outliers");
  detail::add_run_options(*detect, cfg, true);
  detect->add_option("--mode", cfg.mode, "classical | weighted (default weighted)")
      ->check(CLI::IsMember({"classical", "weighted"}));
  auto *compare = app.add_subcommand("compare", "Run both models and compare their errors");
  detail::add_run_options(*compare, cfg, true);
  auto *fixtures_cmd = app.add_subcommand("fixtures", "Write the bundled fixture files");
  fixtures_cmd->add_option("--out", fixtures_dir, "Target directory (default .)");

  auto usage = [&](const std::string &message, const CLI::App &which) {
    err << "error: " << message << "\n\n" << which.help();
    return kUsageError;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    const CLI::App *which = &app;
    for (const auto *sub : app.get_subcommands())
      which = sub;
    return usage(e.what(), *which);
  }

  CLI::App *active = app.get_subcommands().front();
  try {
    if (active == fixtures_cmd)
      return detail::write_fixtures(fixtures_dir, out);

    if (active != validate)
      detail::resolve_coefficients(cfg);
    const auto format = *io::parse_format(cfg.format);

    if (active == validate) {
      auto dataset = detail::load(cfg);
      const auto violations = validate_dataset(dataset);
      for (const auto &v : violations)
        out << v.message << '\n';
      if (!violations.empty())
        return kDataError;
      out << "ok: " << dataset.size() << " sites, " << dataset.edges().size() << " edges\n";
      return kOk;
    }

    auto dataset = detail::load_valid(cfg, err);
    if (!dataset)
      return kDataError;
    const Regime regime = detail::regime_for(cfg, *dataset);
    if (active == neighbors) {
      detail::emit(cfg, io::render_neighbors(*dataset, neighbor_sets(*dataset, regime, cfg.params), format), out);
    } else if (active == weights) {
      detail::emit(cfg, io::render_weights(neighborhood_weights(*dataset, cfg.params, regime), format), out);
    } else {
      if (!dataset->has_attribute(cfg.attribute))
        throw UsageError("dataset has no attribute '" + cfg.attribute + "'");
      if (active == detect) {
        const auto result = detect_outliers(*dataset, cfg.attribute, cfg.params, *parse_mode(cfg.mode), regime);
        detail::emit(cfg, io::render_report(result, format), out);
      } else {
        const auto classical = detect_outliers(*dataset, cfg.attribute, cfg.params, Mode::classical, regime);
        const auto weighted = detect_outliers(*dataset, cfg.attribute, cfg.params, Mode::weighted, regime);
        detail::emit(cfg, io::render_report(compare_models(classical, weighted), format), out);
      }
    }
    return kOk;
  } catch (const UsageError &e) {
    return usage(e.what(), *active);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

} // namespace wsod::cli
