#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsod/dataset.hpp"
#include "wsod/error.hpp"
#include "wsod/neighborhood.hpp"
#include "wsod/types.hpp"
#include "wsod/weights.hpp"

namespace wsod {

enum class Mode { classical, weighted };

inline std::string_view to_string(Mode m) noexcept { return m == Mode::classical ? "classical" : "weighted"; }

inline std::optional<Mode> parse_mode(std::string_view s) noexcept {
  if (s == "classical")
    return Mode::classical;
  if (s == "weighted")
    return Mode::weighted;
  return std::nullopt;
}

using ValueMap = std::map<SiteId, double>;

struct SiteScore {
  SiteId site;
  double actual = 0.0;
  double expected = 0.0;
  double diff = 0.0; ///< actual - expected
  double z = 0.0;    ///< signed standard score of diff
  bool is_outlier = false;

  friend bool operator==(const SiteScore &, const SiteScore &) = default;
};

/// Scores in dataset order. mu and sigma are the mean and population standard
/// deviation of diff over scores; both are 0 when nothing was scored.
struct DetectionResult {
  std::string attribute;
  Mode mode = Mode::weighted;
  Regime regime = Regime::buffer;
  std::vector<SiteScore> scores;
  double mu = 0.0;
  double sigma = 0.0;
  double theta = 2.0;
  std::vector<SiteId> skipped; ///< sites with an empty neighborhood

  std::vector<SiteId> outliers() const {
    std::vector<SiteId> out;
    for (const auto &s : scores)
      if (s.is_outlier)
        out.push_back(s.site);
    return out;
  }

  const SiteScore *find(const SiteId &id) const {
    for (const auto &s : scores)
      if (s.site == id)
        return &s;
    return nullptr;
  }
};

/// Plain mean of the neighbor values.
inline double expected_classical(std::span<const double> neighbor_values) {
  if (neighbor_values.empty())
    throw NoNeighborsError("expected_classical: empty neighborhood");
  double sum = 0.0;
  for (double v : neighbor_values)
    sum += v;
  return sum / static_cast<double>(neighbor_values.size());
}

/// Weighted sum of neighbor values. Bit-identical to expected_classical over
/// the same entry order when all weights are equal.
inline double expected_weighted(const WeightedNeighborhood &weights, const ValueMap &values) {
  if (weights.entries.empty())
    throw NoNeighborsError("expected_weighted: empty neighborhood of " + weights.center.str());
  std::vector<double> vals;
  vals.reserve(weights.entries.size());
  for (const auto &e : weights.entries) {
    auto it = values.find(e.neighbor);
    if (it == values.end())
      throw LookupError("expected_weighted: no value for neighbor " + e.neighbor.str());
    vals.push_back(it->second);
  }
  const double w0 = weights.entries.front().weight;
  if (std::all_of(weights.entries.begin(), weights.entries.end(), [w0](const auto &e) { return e.weight == w0; }))
    return expected_classical(vals);
  double sum = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    sum += weights.entries[i].weight * vals[i];
  return sum;
}

/// actual - expected per site; both maps must have the same keys.
inline ValueMap difference_scores(const ValueMap &actuals, const ValueMap &expecteds) {
  if (actuals.size() != expecteds.size())
    throw LookupError("difference_scores: key sets differ");
  ValueMap out;
  for (const auto &[id, actual] : actuals) {
    auto it = expecteds.find(id);
    if (it == expecteds.end())
      throw LookupError("difference_scores: no expected value for " + id.str());
    out.emplace(id, actual - it->second);
  }
  return out;
}

struct SignificanceScores {
  struct Entry {
    SiteId site;
    double diff = 0.0;
    double z = 0.0;
    bool is_outlier = false;
  };
  std::vector<Entry> entries;
  double mu = 0.0;
  double sigma = 0.0;
  double theta = 2.0;
};

/// Standardizes diffs with their mean and population standard deviation and
/// flags |z| > theta. Sums run in input order.
inline SignificanceScores significance_scores(std::span<const std::pair<SiteId, double>> diffs, double theta) {
  if (!(theta > 0.0))
    throw Error("significance_scores: theta must be positive");
  if (diffs.size() < 2)
    throw DegenerateDistributionError("significance_scores: need at least two scored sites");
  const double n = static_cast<double>(diffs.size());
  double sum = 0.0;
  for (const auto &[id, d] : diffs)
    sum += d;
  const double mu = sum / n;
  double ss = 0.0;
  for (const auto &[id, d] : diffs)
    ss += (d - mu) * (d - mu);
  const double sigma = std::sqrt(ss / n);
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DegenerateDistributionError("significance_scores: difference scores have zero spread");
  SignificanceScores out;
  out.mu = mu;
  out.sigma = sigma;
  out.theta = theta;
  out.entries.reserve(diffs.size());
  for (const auto &[id, d] : diffs) {
    const double z = (d - mu) / sigma;
    out.entries.push_back({id, d, z, std::abs(z) > theta});
  }
  return out;
}

inline SignificanceScores significance_scores(const ValueMap &diffs, double theta) {
  std::vector<std::pair<SiteId, double>> v(diffs.begin(), diffs.end());
  return significance_scores(v, theta);
}

/// Full pipeline: neighbors under regime, expectation per mode, difference,
/// z-test. In weighted mode the buffer regime uses inverse-distance weights,
/// graph and combined use the three-factor blend, polygon the distance/area mix.
inline DetectionResult detect_outliers(const SpatialDataset &dataset, const std::string &attribute,
                                       const WeightParams &params, Mode mode, Regime regime) {
  if (auto why = params.check(); !why.empty())
    throw Error("detect_outliers: " + why);
  if (!dataset.has_attribute(attribute))
    throw LookupError("detect_outliers: no attribute " + attribute);

  const auto sets = neighbor_sets(dataset, regime, params);
  ValueMap values;
  for (std::size_t i = 0; i < dataset.size(); ++i)
    values.emplace(dataset.id_at(i), dataset.value(i, attribute));

  std::optional<EdgeGraph> graph;
  if (mode == Mode::weighted)
    graph.emplace(dataset);

  DetectionResult result;
  result.attribute = attribute;
  result.mode = mode;
  result.regime = regime;
  result.theta = params.theta;

  std::vector<std::pair<SiteId, double>> diffs;
  std::vector<std::pair<double, double>> actual_expected;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const SiteId &id = dataset.id_at(i);
    if (sets[i].empty()) {
      result.skipped.push_back(id);
      continue;
    }
    std::vector<std::size_t> nb = sets[i];
    std::sort(nb.begin(), nb.end(), [&](std::size_t a, std::size_t b) { return dataset.id_at(a) < dataset.id_at(b); });

    double expected = 0.0;
    if (mode == Mode::classical) {
      std::vector<double> vals;
      vals.reserve(nb.size());
      for (auto j : nb)
        vals.push_back(dataset.value(j, attribute));
      expected = expected_classical(vals);
    } else {
      expected = expected_weighted(detail::regime_weights(dataset, *graph, i, nb, params, regime), values);
    }
    const double actual = values.at(id);
    diffs.emplace_back(id, actual - expected);
    actual_expected.emplace_back(actual, expected);
  }

  if (diffs.empty())
    return result;

  const auto sig = significance_scores(diffs, params.theta);
  result.mu = sig.mu;
  result.sigma = sig.sigma;
  result.scores.reserve(diffs.size());
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const auto &e = sig.entries[k];
    result.scores.push_back(
        {e.site, actual_expected[k].first, actual_expected[k].second, e.diff, e.z, e.is_outlier});
  }
  return result;
}

inline DetectionResult detect_outliers(const SpatialDataset &dataset, const std::string &attribute,
                                       const WeightParams &params, Mode mode) {
  return detect_outliers(dataset, attribute, params, mode, default_regime(dataset));
}

struct ComparisonRow {
  SiteId site;
  double actual = 0.0;
  double expected_classical = 0.0;
  double expected_weighted = 0.0;
  double sq_error_classical = 0.0;
  double sq_error_weighted = 0.0;
  double sq_error_delta = 0.0;           ///< classical - weighted
  std::optional<double> improvement_pct; ///< 100 * delta / classical; empty when classical error is 0
};

struct ComparisonReport {
  std::string attribute;
  std::vector<ComparisonRow> per_site;
  double mean_improvement_pct = 0.0;       ///< mean over rows with a defined improvement
  double mean_sq_error_reduction_pct = 0.0; ///< 100 * (sum classical - sum weighted) / sum classical
  std::vector<SiteId> skipped;
};

/// Squared difference errors of both models per site, their delta and the
/// relative improvement of the weighted model.
inline ComparisonReport compare_models(const DetectionResult &classical, const DetectionResult &weighted) {
  if (classical.attribute != weighted.attribute)
    throw LookupError("compare_models: results are for different attributes");
  if (classical.scores.size() != weighted.scores.size())
    throw LookupError("compare_models: results cover different sites");
  std::map<SiteId, const SiteScore *> by_id;
  for (const auto &s : weighted.scores)
    by_id.emplace(s.site, &s);

  ComparisonReport report;
  report.attribute = classical.attribute;
  report.skipped = classical.skipped;
  double improvement_sum = 0.0, total_c = 0.0, total_w = 0.0;
  std::size_t improvement_count = 0;
  for (const auto &c : classical.scores) {
    auto it = by_id.find(c.site);
    if (it == by_id.end())
      throw LookupError("compare_models: site " + c.site.str() + " missing from the weighted result");
    const SiteScore &w = *it->second;
    ComparisonRow row;
    row.site = c.site;
    row.actual = c.actual;
    row.expected_classical = c.expected;
    row.expected_weighted = w.expected;
    row.sq_error_classical = c.diff * c.diff;
    row.sq_error_weighted = w.diff * w.diff;
    row.sq_error_delta = row.sq_error_classical - row.sq_error_weighted;
    if (row.sq_error_classical > 0.0) {
      row.improvement_pct = 100.0 * row.sq_error_delta / row.sq_error_classical;
      improvement_sum += *row.improvement_pct;
      ++improvement_count;
    }
    total_c += row.sq_error_classical;
    total_w += row.sq_error_weighted;
    report.per_site.push_back(std::move(row));
  }
  if (improvement_count > 0)
    report.mean_improvement_pct = improvement_sum / static_cast<double>(improvement_count);
  if (total_c > 0.0)
    report.mean_sq_error_reduction_pct = 100.0 * (total_c - total_w) / total_c;
  return report;
}

} // namespace wsod
