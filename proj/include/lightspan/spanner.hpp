// Light near-additive spanner construction.
//
// The pipeline normalizes the input so that w(MST) = n, builds the net
// hierarchy and its path system H0, samples the level sets
// V = A_0 ⊇ A_1 ⊇ ... ⊇ A_k, connects every vertex to representatives of its
// (1-eps)/2-bunch and finally adds one shallow-light forest per level
// i = 1..k rooted at A_i.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/net_hierarchy.hpp"
#include "lightspan/trees.hpp"

namespace lightspan {

// Which construction step first contributed an edge.
enum class Phase : std::uint8_t { h0, p2_rep, p2_direct, p2_top, slt };

inline constexpr std::array<Phase, 5> kAllPhases = {Phase::h0, Phase::p2_rep, Phase::p2_direct, Phase::p2_top,
                                                    Phase::slt};

std::string_view to_string(Phase phase);
Phase parse_phase(std::string_view name);

struct Normalized {
  WeightedGraph graph;
  // Every weight was multiplied by scale = n / w(MST).
  double scale = 1.0;
};

Normalized normalize(const WeightedGraph& g);

/// Random level sets with uniform promotion probability n^(-1/k) and the
/// nearest-point ("pivot") tables for every level 0..k.
class LevelSampling {
 public:
  int k() const noexcept { return k_; }
  // Seed of the accepted attempt (requested seed + retries).
  std::uint64_t seed() const noexcept { return seed_; }
  int attempts() const noexcept { return attempts_; }

  // A_i for i in [0, k]; ascending ids.
  const std::vector<VertexId>& level(int i) const { return levels_.at(static_cast<std::size_t>(i)); }
  int level_of(VertexId v) const { return level_of_.at(static_cast<std::size_t>(v)); }
  bool contains(int i, VertexId v) const { return level_of(v) >= i; }

  /// d(v, A_i); +inf for i > k.
  double pivot_dist(VertexId v, int i) const;
  /// Nearest vertex of A_i (ties by smallest id); kNoVertex for i > k.
  VertexId pivot(VertexId v, int i) const;

 private:
  friend LevelSampling sample_levels(const WeightedGraph& g, int k, std::uint64_t seed);

  int k_ = 0;
  std::uint64_t seed_ = 0;
  int attempts_ = 0;
  std::vector<std::vector<VertexId>> levels_;
  std::vector<int> level_of_;
  std::vector<std::vector<double>> pivot_dist_;
  std::vector<std::vector<VertexId>> pivot_;
};

inline constexpr int kSamplingRetries = 32;

/// Deterministic given seed. An empty A_i (i <= k) triggers a resample with
/// seed+1, up to kSamplingRetries times, then SamplingError.
LevelSampling sample_levels(const WeightedGraph& g, int k, std::uint64_t seed);

struct Bunch {
  VertexId center = kNoVertex;
  double delta = 0.0;
  int level = 0;
  std::vector<VertexId> members;  // ascending, includes the centre
};

/// For a centre at level i < k: the vertices of A_i strictly closer than
/// delta * d(center, A_{i+1}). For a centre in A_k: all of A_k.
Bunch bunch_of(const LevelSampling& ls, const WeightedGraph& g, VertexId u, double delta);

/// The unique j with (eps/8) d <= 2^j < (eps/4) d, for d > 0.
int representative_scale(double eps, double d);

// One bunch connection u -> r(u, v).
struct RepConnection {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  int level = 0;  // level of u in the sampling
  int scale = 0;  // j; negative for direct connections
  VertexId target = kNoVertex;
  Phase tag = Phase::p2_rep;
  double dist_uv = 0.0;
  double dist_to_target = 0.0;
};

struct PhaseTwoPaths {
  // Distinct edges in order of first use, with the tag of that first use.
  std::vector<std::pair<EdgeId, Phase>> edges;
  std::vector<RepConnection> connections;
  // paths[c]: vertices u .. target of connections[c]; filled on request.
  std::vector<std::vector<VertexId>> paths;
};

PhaseTwoPaths phase2_paths(const WeightedGraph& g, const NetHierarchy& h, const LevelSampling& ls, double eps,
                           bool retain_paths = false);

enum class SpannerKind { near_additive, wmax };

struct SpannerParams {
  double eps = 0.0;
  int k = 0;  // 0 for the W_max construction
  std::uint64_t seed = 0;
  bool unsafe_eps = false;
};

struct PhaseSummary {
  std::size_t edges = 0;
  double weight = 0.0;
};

/// Subgraph of a host graph. Edge ids refer to the host; each edge carries
/// the phase that added it first.
struct Spanner {
  SpannerKind kind = SpannerKind::near_additive;
  SpannerParams params;
  std::uint64_t effective_seed = 0;
  double scale = 1.0;
  std::size_t host_vertices = 0;
  std::size_t host_edges = 0;
  std::vector<EdgeId> edges;  // ascending
  std::vector<Phase> tags;    // parallel to edges

  /// Throws StructuralError if `host` is not the graph this was built on.
  void check_host(const WeightedGraph& host) const;
  WeightedGraph subgraph(const WeightedGraph& host) const;
  double weight(const WeightedGraph& host) const;
  /// Per-phase edge counts and weights in host units.
  std::array<PhaseSummary, kAllPhases.size()> summary(const WeightedGraph& host) const;
};

struct BuildOptions {
  bool unsafe_eps = false;
  // Keep full vertex lists of the phase-2 paths (needed by the lemma checks).
  bool retain_paths = false;
};

// Everything the construction computed, in normalized units.
struct SpannerConstruction {
  Spanner spanner;
  Normalized normalized;
  NetHierarchy hierarchy;
  LevelSampling sampling;
  PhaseTwoPaths phase_two;
  std::vector<SltForest> forests;  // forests[i-1] is rooted at A_i
};

SpannerConstruction construct_spanner(const WeightedGraph& g, double eps, int k, std::uint64_t seed,
                                      const BuildOptions& options = {});

Spanner build_spanner(const WeightedGraph& g, double eps, int k, std::uint64_t seed,
                      const BuildOptions& options = {});

/// 24 (3 Delta)^k with Delta = 7 + 14k/eps: the additive stretch coefficient,
/// in units of W(x, y), proven for the near-additive spanner.
double near_additive_beta(int k, double eps);

struct WmaxConstruction {
  Spanner spanner;
  Normalized normalized;
  DeltaNet net;  // sqrt(n)-net in normalized units; one SLT per member
};

/// Requires W_max >= sqrt(n) after normalization (PreconditionError
/// otherwise). Union of SLTs rooted at the points of a sqrt(n)-net.
WmaxConstruction construct_wmax_spanner(const WeightedGraph& g, double eps);
Spanner build_wmax_spanner(const WeightedGraph& g, double eps);

}  // namespace lightspan
