// Exact certification of spanner, net and tree guarantees.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/net_hierarchy.hpp"
#include "lightspan/spanner.hpp"
#include "lightspan/trees.hpp"

namespace lightspan {

// Relative slack applied to upper-bound comparisons of floating-point
// distances. Lower bounds (d_H >= d_G) are compared exactly.
inline constexpr double kRelativeTolerance = 1e-9;

inline bool within(double value, double bound) { return value <= bound * (1.0 + kRelativeTolerance); }

enum class VerifyMode { all_pairs, sampled };

std::string_view to_string(VerifyMode mode);
VerifyMode parse_verify_mode(std::string_view name);

/// d_H(x, y) <= multiplicative * d_G(x, y) + additive * W for every pair,
/// where W is the min-bottleneck heaviest edge of a shortest x-y path
/// (per_pair_bottleneck) or the global maximum edge weight.
struct StretchBound {
  double multiplicative = 1.0;
  double additive = 0.0;
  bool per_pair_bottleneck = true;
};

/// (1 + 2 eps, 24 (3 Delta)^k, W(x, y)) for the near-additive spanner and
/// (1 + eps, 2 (1 + eps), W_max) for the W_max spanner.
StretchBound default_stretch_bound(const Spanner& sp);

struct StretchViolation {
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
  double d_g = 0.0;
  double d_h = 0.0;
  double w = 0.0;
};

inline constexpr std::size_t kMaxReportedViolations = 64;

struct StretchReport {
  VerifyMode mode = VerifyMode::all_pairs;
  std::size_t sources_checked = 0;
  std::size_t pairs_checked = 0;
  double multiplicative = 1.0;
  double worst_mult_stretch = 1.0;
  // max over pairs of max(0, d_H - multiplicative * d_G) / W.
  double worst_additive_slack = 0.0;
  double bound_used = 0.0;
  bool per_pair_bottleneck = true;
  std::size_t violation_count = 0;
  std::size_t lower_bound_failures = 0;
  // First kMaxReportedViolations violations (upper or lower bound).
  std::vector<StretchViolation> violations;

  bool passed() const noexcept { return violation_count == 0 && lower_bound_failures == 0; }
};

/// Runs Dijkstra in g (tracking bottlenecks) and in the spanner from every
/// vertex, or from `sample_size` seeded random sources in sampled mode, and
/// checks the pair bound for all targets.
StretchReport verify_stretch(const WeightedGraph& g, const Spanner& sp, VerifyMode mode = VerifyMode::all_pairs,
                             std::size_t sample_size = 0, std::uint64_t seed = 0);
StretchReport verify_stretch(const WeightedGraph& g, const Spanner& sp, const StretchBound& bound,
                             VerifyMode mode = VerifyMode::all_pairs, std::size_t sample_size = 0,
                             std::uint64_t seed = 0);
/// Same check for an arbitrary subgraph h of g on the same vertex set.
StretchReport verify_stretch(const WeightedGraph& g, const WeightedGraph& h, const StretchBound& bound,
                             VerifyMode mode = VerifyMode::all_pairs, std::size_t sample_size = 0,
                             std::uint64_t seed = 0);

struct LightnessReport {
  double spanner_weight = 0.0;
  double mst_weight = 0.0;
  double lightness = 0.0;
  std::array<PhaseSummary, kAllPhases.size()> per_phase{};
  std::size_t size = 0;
};

LightnessReport verify_lightness(const WeightedGraph& g, const Spanner& sp);
LightnessReport verify_lightness(const WeightedGraph& g, const WeightedGraph& h);

struct NetCheck {
  bool covering = true;
  bool packing = true;
  // Lemma: |N| delta <= 2 w(MST) whenever |N| >= 2.
  bool mst_bound = true;
  std::optional<std::pair<VertexId, double>> uncovered;                 // vertex, distance to the net
  std::optional<std::tuple<VertexId, VertexId, double>> close_members;  // u, v, d(u, v)
  double mst_weight = 0.0;

  bool passed() const noexcept { return covering && packing && mst_bound; }
};

NetCheck verify_net(const WeightedGraph& g, const DeltaNet& net);

struct SltCheck {
  bool root_stretch = true;
  bool lightness = true;
  bool spanning = true;
  std::optional<std::tuple<VertexId, double, double>> worst;  // x, d_T(root, x), d_G(root, x)
  double weight = 0.0;
  double weight_bound = 0.0;

  bool passed() const noexcept { return root_stretch && lightness && spanning; }
};

/// Both shallow-light conditions with gamma = 1 + 2/eps.
SltCheck verify_slt(const WeightedGraph& g, const SpanningTree& t, VertexId root, double eps);

/// d_forest(u, p'(u)) <= (1 + eps) d(u, roots) with p'(u) a root, for all u.
SltCheck verify_slt_forest(const WeightedGraph& g, const SltForest& forest, std::span<const VertexId> roots,
                           double eps);

struct LemmaCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string witness;  // first counterexample, empty when passed

  bool passed() const noexcept { return failures == 0; }
};

struct LemmaSuiteReport {
  std::vector<LemmaCheck> checks;

  bool passed() const noexcept;
  const LemmaCheck& at(std::string_view name) const;
};

/// Exhaustive instantiation of the construction's structural lemmas on the
/// normalized graph: net validity, representative distances in H0,
/// bunch stretch, representative path lengths, bunch containment of the
/// C_ij(x) sets, intersecting paths, and approximate pivots. `sp` is checked
/// in place of the spanner stored in `c`, which allows negative controls.
/// Needs c built with retain_paths for the intersecting-paths check.
LemmaSuiteReport verify_lemma_suite(const SpannerConstruction& c, const Spanner& sp);
LemmaSuiteReport verify_lemma_suite(const SpannerConstruction& c);

}  // namespace lightspan
