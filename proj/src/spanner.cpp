#include "lightspan/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lightspan/random.hpp"
#include "lightspan/shortest_paths.hpp"

namespace lightspan {
namespace {

void check_eps(double eps, bool unsafe) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive");
  if (!unsafe && !(eps < 0.1)) {
    throw ParameterError("eps must lie in (0, 1/10); got " + std::to_string(eps) + " (override with unsafe eps)");
  }
}

// Assigns each edge the first phase that touches it.
class TagAccumulator {
 public:
  explicit TagAccumulator(std::size_t m) : tag_(m, -1) {}

  bool add(EdgeId id, Phase phase) {
    auto& slot = tag_[static_cast<std::size_t>(id)];
    if (slot >= 0) return false;
    slot = static_cast<std::int8_t>(phase);
    return true;
  }

  void fill(Spanner& sp) const {
    for (std::size_t id = 0; id < tag_.size(); ++id) {
      if (tag_[id] < 0) continue;
      sp.edges.push_back(static_cast<EdgeId>(id));
      sp.tags.push_back(static_cast<Phase>(tag_[id]));
    }
  }

 private:
  std::vector<std::int8_t> tag_;
};

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::h0: return "H0";
    case Phase::p2_rep: return "P2_REP";
    case Phase::p2_direct: return "P2_DIRECT";
    case Phase::p2_top: return "P2_TOP";
    case Phase::slt: return "SLT";
  }
  return "?";
}

Phase parse_phase(std::string_view name) {
  for (Phase p : kAllPhases) {
    if (to_string(p) == name) return p;
  }
  throw InputError("unknown phase tag '" + std::string(name) + "'");
}

Normalized normalize(const WeightedGraph& g) {
  const double weight = mst(g).total_weight;
  const double scale = static_cast<double>(g.num_vertices()) / weight;
  return Normalized{g.scaled(scale), scale};
}

double LevelSampling::pivot_dist(VertexId v, int i) const {
  if (i > k_) return kInfinity;
  return pivot_dist_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(v));
}

VertexId LevelSampling::pivot(VertexId v, int i) const {
  if (i > k_) return kNoVertex;
  return pivot_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(v));
}

LevelSampling sample_levels(const WeightedGraph& g, int k, std::uint64_t seed) {
  if (k < 1) throw ParameterError("k must be a positive integer");
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("cannot sample levels of an empty graph");
  const double p = std::pow(static_cast<double>(n), -1.0 / k);

  LevelSampling ls;
  ls.k_ = k;
  bool accepted = false;
  for (int attempt = 0; attempt <= kSamplingRetries && !accepted; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    ls.levels_.assign(static_cast<std::size_t>(k) + 1, {});
    ls.levels_[0].resize(n);
    for (std::size_t v = 0; v < n; ++v) ls.levels_[0][v] = static_cast<VertexId>(v);
    accepted = true;
    for (int i = 1; i <= k; ++i) {
      Rng rng(derive_seed(s, static_cast<std::uint64_t>(i)));
      for (VertexId v : ls.levels_[static_cast<std::size_t>(i) - 1]) {
        if (rng.bernoulli(p)) ls.levels_[static_cast<std::size_t>(i)].push_back(v);
      }
      if (ls.levels_[static_cast<std::size_t>(i)].empty()) {
        accepted = false;
        break;
      }
    }
    ls.seed_ = s;
    ls.attempts_ = attempt + 1;
  }
  if (!accepted) {
    throw SamplingError("some level stayed empty after " + std::to_string(kSamplingRetries) +
                        " resamples (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }

  ls.level_of_.assign(n, 0);
  for (int i = 1; i <= k; ++i) {
    for (VertexId v : ls.levels_[static_cast<std::size_t>(i)]) ls.level_of_[static_cast<std::size_t>(v)] = i;
  }
  for (int i = 0; i <= k; ++i) {
    DistanceTable t = multi_source_dijkstra(g, ls.levels_[static_cast<std::size_t>(i)]);
    ls.pivot_dist_.push_back(std::move(t.dist));
    ls.pivot_.push_back(std::move(t.root));
  }
  return ls;
}

Bunch bunch_of(const LevelSampling& ls, const WeightedGraph& g, VertexId u, double delta) {
  g.check_vertex(u);
  if (!(delta > 0.0 && delta <= 1.0)) throw ParameterError("bunch scale must lie in (0, 1]");
  Bunch b{u, delta, ls.level_of(u), {}};
  if (b.level == ls.k()) {
    b.members = ls.level(ls.k());
    return b;
  }
  const double radius = delta * ls.pivot_dist(u, b.level + 1);
  const DistanceTable ball = dijkstra_within(g, u, radius);
  for (VertexId v : ls.level(b.level)) {
    // Rounding can put a higher-level vertex a hair inside the radius.
    if (ls.level_of(v) == b.level && ball[v] < radius) b.members.push_back(v);
  }
  return b;
}

int representative_scale(double eps, double d) {
  const double lo = eps * d / 8.0;
  int j = static_cast<int>(std::floor(std::log2(lo)));
  while (std::ldexp(1.0, j) < lo) ++j;
  while (std::ldexp(1.0, j - 1) >= lo) --j;
  return j;
}

PhaseTwoPaths phase2_paths(const WeightedGraph& g, const NetHierarchy& h, const LevelSampling& ls, double eps,
                           bool retain_paths) {
  const std::size_t n = g.num_vertices();
  const double delta = (1.0 - eps) / 2.0;
  const int k = ls.k();
  PhaseTwoPaths out;
  TagAccumulator seen(g.num_edges());
  std::vector<std::size_t> stamp(n, 0);

  for (std::size_t ui = 0; ui < n; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    const int level = ls.level_of(u);
    // Every representative lies strictly inside the 1-bunch radius, so one
    // search out to the pivot distance serves the whole bunch.
    const double pivot_radius = ls.pivot_dist(u, level + 1);
    DistanceTable tree = level < k ? dijkstra_within(g, u, pivot_radius) : dijkstra(g, u);
    bool full = level >= k;
    const double bunch_radius = delta * pivot_radius;

    for (VertexId v : ls.level(level)) {
      if (v == u) continue;
      if (level < k && (ls.level_of(v) > level || !(tree[v] < bunch_radius))) continue;
      if (level == k && !tree.reached(v)) {
        throw StructuralError("graph is disconnected");
      }
      RepConnection c;
      c.u = u;
      c.v = v;
      c.level = level;
      c.dist_uv = tree[v];
      c.scale = representative_scale(eps, c.dist_uv);
      if (c.scale > h.top_level()) {
        throw std::logic_error("representative scale above the hierarchy top; input not normalized?");
      }
      c.target = c.scale < 0 ? v : h.rep(v, c.scale);
      c.tag = level == k ? Phase::p2_top : (c.scale < 0 ? Phase::p2_direct : Phase::p2_rep);
      if (!tree.reached(c.target) && !full) {
        // Only possible when eps is outside the safe range.
        tree = dijkstra(g, u);
        full = true;
      }
      c.dist_to_target = tree[c.target];

      std::vector<VertexId> path;
      for (VertexId x = c.target; x != u; x = tree.parent[static_cast<std::size_t>(x)]) {
        if (retain_paths) path.push_back(x);
        auto& mark = stamp[static_cast<std::size_t>(x)];
        if (mark == ui + 1 && !retain_paths) break;
        if (mark != ui + 1) {
          mark = ui + 1;
          const EdgeId e = tree.parent_edge[static_cast<std::size_t>(x)];
          if (seen.add(e, c.tag)) out.edges.emplace_back(e, c.tag);
        }
      }
      if (retain_paths) {
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        out.paths.push_back(std::move(path));
      }
      out.connections.push_back(c);
    }
  }
  return out;
}

void Spanner::check_host(const WeightedGraph& host) const {
  if (host.num_vertices() != host_vertices || host.num_edges() != host_edges) {
    throw StructuralError("spanner was built on a graph with " + std::to_string(host_vertices) + " vertices and " +
                          std::to_string(host_edges) + " edges; got " + std::to_string(host.num_vertices()) +
                          " and " + std::to_string(host.num_edges()));
  }
  if (tags.size() != edges.size()) throw StructuralError("spanner tag list does not match its edge list");
  for (EdgeId id : edges) {
    if (id < 0 || static_cast<std::size_t>(id) >= host_edges) throw StructuralError("spanner edge id out of range");
  }
}

WeightedGraph Spanner::subgraph(const WeightedGraph& host) const {
  check_host(host);
  return host.subgraph(edges);
}

double Spanner::weight(const WeightedGraph& host) const {
  check_host(host);
  double total = 0.0;
  for (EdgeId id : edges) total += host.edge(id).w;
  return total;
}

std::array<PhaseSummary, kAllPhases.size()> Spanner::summary(const WeightedGraph& host) const {
  check_host(host);
  std::array<PhaseSummary, kAllPhases.size()> out{};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& s = out[static_cast<std::size_t>(tags[i])];
    ++s.edges;
    s.weight += host.edge(edges[i]).w;
  }
  return out;
}

SpannerConstruction construct_spanner(const WeightedGraph& g, double eps, int k, std::uint64_t seed,
                                      const BuildOptions& options) {
  check_eps(eps, options.unsafe_eps);
  if (k < 1) throw ParameterError("k must be a positive integer");
  if (g.num_vertices() < 2) throw InputError("spanner construction needs at least two vertices");
  if (!g.is_connected()) throw StructuralError("spanner construction needs a connected graph");

  SpannerConstruction c{{}, normalize(g), {}, {}, {}, {}};
  const WeightedGraph& ng = c.normalized.graph;
  c.hierarchy = build_net_hierarchy(ng, eps, options.unsafe_eps);
  c.sampling = sample_levels(ng, k, seed);
  c.phase_two = phase2_paths(ng, c.hierarchy, c.sampling, eps, options.retain_paths);
  for (int i = 1; i <= k; ++i) c.forests.push_back(slt_forest(ng, c.sampling.level(i), eps));

  TagAccumulator tags(g.num_edges());
  for (EdgeId id : c.hierarchy.h0_edges()) tags.add(id, Phase::h0);
  for (const auto& [id, phase] : c.phase_two.edges) tags.add(id, phase);
  for (const SltForest& f : c.forests) {
    for (EdgeId id : f.edges) tags.add(id, Phase::slt);
  }

  Spanner& sp = c.spanner;
  sp.kind = SpannerKind::near_additive;
  sp.params = SpannerParams{eps, k, seed, options.unsafe_eps};
  sp.effective_seed = c.sampling.seed();
  sp.scale = c.normalized.scale;
  sp.host_vertices = g.num_vertices();
  sp.host_edges = g.num_edges();
  tags.fill(sp);
  if (!g.subgraph(sp.edges).is_connected()) {
    throw std::logic_error("constructed spanner is disconnected");
  }
  return c;
}

Spanner build_spanner(const WeightedGraph& g, double eps, int k, std::uint64_t seed, const BuildOptions& options) {
  return construct_spanner(g, eps, k, seed, options).spanner;
}

double near_additive_beta(int k, double eps) {
  const double delta = 7.0 + 14.0 * k / eps;
  return 24.0 * std::pow(3.0 * delta, k);
}

WmaxConstruction construct_wmax_spanner(const WeightedGraph& g, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive");
  if (g.num_vertices() < 2) throw InputError("spanner construction needs at least two vertices");
  if (!g.is_connected()) throw StructuralError("spanner construction needs a connected graph");

  WmaxConstruction c{{}, normalize(g), {}};
  const WeightedGraph& ng = c.normalized.graph;
  const double root_n = std::sqrt(static_cast<double>(g.num_vertices()));
  const double w_max = ng.max_weight();
  if (w_max < root_n) {
    throw PreconditionError("W_max >= sqrt(w(MST)) required: normalized W_max = " + std::to_string(w_max) +
                            " < sqrt(n) = " + std::to_string(root_n));
  }
  c.net = greedy_delta_net(ng, root_n, {});
  TagAccumulator tags(g.num_edges());
  for (VertexId v : c.net.members) {
    for (EdgeId id : slt(ng, v, eps).edges) tags.add(id, Phase::slt);
  }
  Spanner& sp = c.spanner;
  sp.kind = SpannerKind::wmax;
  sp.params = SpannerParams{eps, 0, 0, false};
  sp.scale = c.normalized.scale;
  sp.host_vertices = g.num_vertices();
  sp.host_edges = g.num_edges();
  tags.fill(sp);
  return c;
}

Spanner build_wmax_spanner(const WeightedGraph& g, double eps) { return construct_wmax_spanner(g, eps).spanner; }

}  // namespace lightspan
