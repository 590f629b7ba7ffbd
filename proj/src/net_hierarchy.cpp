#include "lightspan/net_hierarchy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>
#include <string>

#include "lightspan/shortest_paths.hpp"
#include "lightspan/trees.hpp"

namespace lightspan {
namespace {

// Lowers dist[] to min(dist, d(source, .)) in place.
void absorb_source(const WeightedGraph& g, VertexId source, std::vector<double>& dist) {
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[static_cast<std::size_t>(source)] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    for (const Arc& a : g.neighbors(v)) {
      const double candidate = d + a.w;
      double& current = dist[static_cast<std::size_t>(a.to)];
      if (candidate < current) {
        current = candidate;
        queue.emplace(candidate, a.to);
      }
    }
  }
}

}  // namespace

DeltaNet greedy_delta_net(const WeightedGraph& g, double delta, std::span<const VertexId> seed_set) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ParameterError("net radius must be positive and finite");
  std::vector<VertexId> members(seed_set.begin(), seed_set.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  const std::size_t n = g.num_vertices();
  std::vector<char> is_member(n, 0);
  for (VertexId s : members) {
    g.check_vertex(s);
    is_member[static_cast<std::size_t>(s)] = 1;
  }
  for (VertexId s : members) {
    const DistanceTable ball = dijkstra_within(g, s, delta);
    for (VertexId t : members) {
      if (t != s && ball.reached(t)) {
        throw PreconditionError("seed vertices " + std::to_string(s) + " and " + std::to_string(t) +
                                " are within distance " + std::to_string(delta));
      }
    }
  }

  std::vector<double> dist(n, kInfinity);
  if (!members.empty()) dist = multi_source_dijkstra(g, members).dist;
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] > delta) {
      members.push_back(static_cast<VertexId>(v));
      absorb_source(g, static_cast<VertexId>(v), dist);
    }
  }
  std::sort(members.begin(), members.end());
  return DeltaNet{delta, std::move(members)};
}

int climb_step(double eps) {
  int t = 1;
  while (std::ldexp(1.0, -t) > eps) ++t;
  return t;
}

VertexId NetHierarchy::rep(VertexId v, int i) const {
  if (i < 0 || in_net(v, i)) return v;
  if (i > top_level_) throw InputError("level " + std::to_string(i) + " above the hierarchy top");
  return rep_.at(static_cast<std::size_t>(i) * num_vertices() + static_cast<std::size_t>(v));
}

VertexId NetHierarchy::nearest(VertexId v, int j) const {
  return nearest_.at(static_cast<std::size_t>(j) * num_vertices() + static_cast<std::size_t>(v));
}

double NetHierarchy::nearest_dist(VertexId v, int j) const {
  return nearest_dist_.at(static_cast<std::size_t>(j) * num_vertices() + static_cast<std::size_t>(v));
}

NetHierarchy build_net_hierarchy(const WeightedGraph& g, double eps, bool unsafe_eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive");
  if (!unsafe_eps && !(eps < 0.1)) {
    throw ParameterError("eps must lie in (0, 1/10); got " + std::to_string(eps) + " (override with unsafe eps)");
  }
  if (g.num_vertices() < 2) throw InputError("net hierarchy needs at least two vertices");
  if (!g.is_connected()) throw StructuralError("net hierarchy needs a connected graph");

  const std::size_t n = g.num_vertices();
  NetHierarchy h;
  h.eps_ = eps;
  h.step_ = climb_step(eps);
  h.mst_weight_ = mst(g).total_weight;

  // The MST weight bounds the diameter, so a single vertex is a 2^top-net.
  int top = std::max(0, static_cast<int>(std::ceil(std::log2(h.mst_weight_))));
  const DistanceTable from_zero = dijkstra(g, 0);
  const double eccentricity = *std::max_element(from_zero.dist.begin(), from_zero.dist.end());
  while (std::ldexp(1.0, top) < eccentricity) ++top;
  h.top_level_ = top;

  h.levels_.resize(static_cast<std::size_t>(top) + 2);
  std::vector<VertexId> everything(n);
  for (std::size_t v = 0; v < n; ++v) everything[v] = static_cast<VertexId>(v);
  h.levels_[0] = DeltaNet{0.5, everything};
  h.levels_[static_cast<std::size_t>(top) + 1] = DeltaNet{std::ldexp(1.0, top), {0}};
  for (int i = top - 1; i >= 0; --i) {
    const auto& above = h.levels_[static_cast<std::size_t>(i) + 2].members;
    h.levels_[static_cast<std::size_t>(i) + 1] = greedy_delta_net(g, std::ldexp(1.0, i), above);
  }

  h.net_level_.assign(n, -1);
  for (int i = 0; i <= top; ++i) {
    for (VertexId v : h.level(i).members) h.net_level_[static_cast<std::size_t>(v)] = i;
  }

  // H0: for each level j, the forest of shortest paths towards N_j carries the
  // paths of every vertex whose own level is within `step` below j.
  const std::size_t levels = static_cast<std::size_t>(top) + 1;
  h.nearest_.assign(levels * n, kNoVertex);
  h.nearest_dist_.assign(levels * n, kInfinity);
  std::vector<char> in_h0(g.num_edges(), 0);
  std::vector<char> walked(n);
  for (int j = 0; j <= top; ++j) {
    const DistanceTable toward = multi_source_dijkstra(g, h.level(j).members);
    std::copy(toward.root.begin(), toward.root.end(), h.nearest_.begin() + static_cast<std::ptrdiff_t>(j * n));
    std::copy(toward.dist.begin(), toward.dist.end(), h.nearest_dist_.begin() + static_cast<std::ptrdiff_t>(j * n));
    std::fill(walked.begin(), walked.end(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      const int own = h.net_level_[v];
      if (!(own < j && j <= own + h.step_)) continue;
      for (auto x = static_cast<VertexId>(v); !walked[static_cast<std::size_t>(x)];
           x = toward.parent[static_cast<std::size_t>(x)]) {
        walked[static_cast<std::size_t>(x)] = 1;
        const EdgeId e = toward.parent_edge[static_cast<std::size_t>(x)];
        if (e == kNoEdge) break;
        in_h0[static_cast<std::size_t>(e)] = 1;
      }
    }
  }
  for (std::size_t id = 0; id < in_h0.size(); ++id) {
    if (in_h0[id]) h.h0_edges_.push_back(static_cast<EdgeId>(id));
  }

  // Representatives: first climb to level a = i mod t, then t levels at a time.
  h.rep_.assign(levels * n, kNoVertex);
  auto climb = [&](VertexId x, int target) {
    const int own = h.net_level_[static_cast<std::size_t>(x)];
    if (own >= target) return x;
    assert(target <= own + h.step_);
    return h.nearest(x, target);
  };
  for (int i = 0; i <= top; ++i) {
    const int a = i % h.step_;
    const int b = i / h.step_;
    for (std::size_t v = 0; v < n; ++v) {
      VertexId x = climb(static_cast<VertexId>(v), a);
      for (int s = 1; s <= b; ++s) x = climb(x, a + s * h.step_);
      h.rep_[static_cast<std::size_t>(i) * n + v] = x;
    }
  }
  return h;
}

double h0_weight(const WeightedGraph& g, const NetHierarchy& h) {
  double total = 0.0;
  for (EdgeId id : h.h0_edges()) total += g.edge(id).w;
  return total;
}

}  // namespace lightspan
