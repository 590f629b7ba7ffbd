// JSON and CSV encodings of hierarchies, spanners and reports.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lightspan/graph.hpp"
#include "lightspan/net_hierarchy.hpp"
#include "lightspan/spanner.hpp"
#include "lightspan/verification.hpp"

namespace lightspan {

inline constexpr std::string_view kHierarchySchema = "lightspan.net_hierarchy/1";
inline constexpr std::string_view kSpannerSchema = "lightspan.spanner/1";
inline constexpr std::string_view kStretchSchema = "lightspan.stretch_report/1";
inline constexpr std::string_view kLightnessSchema = "lightspan.lightness_report/1";
inline constexpr std::string_view kLemmaSchema = "lightspan.lemma_report/1";

nlohmann::json to_json(const NetHierarchy& h);
nlohmann::json to_json(const Spanner& sp, const WeightedGraph& host);
nlohmann::json to_json(const StretchReport& r);
nlohmann::json to_json(const LightnessReport& r);
nlohmann::json to_json(const LemmaSuiteReport& r);

/// Rebuilds a spanner from its JSON form, resolving edges against `host`.
/// Throws StructuralError when an edge is missing from the host or the
/// vertex counts disagree.
Spanner spanner_from_json(const nlohmann::json& j, const WeightedGraph& host);

// Sweep CSV: one row per (graph, parameters) cell.
inline constexpr std::string_view kSweepCsvVersion = "lightspan-sweep/1";
inline constexpr std::string_view kSweepCsvHeader =
    "n,k,eps,seed,size,lightness,worst_mult,worst_slack,bound,runtime_ms";

struct SweepRow {
  std::size_t n = 0;
  int k = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  double lightness = 0.0;
  double worst_mult = 0.0;
  double worst_slack = 0.0;
  double bound = 0.0;
  double runtime_ms = 0.0;
};

std::string sweep_csv_preamble();  // version comment line + header line
std::string to_csv_row(const SweepRow& row);

}  // namespace lightspan
