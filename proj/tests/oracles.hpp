// Independent reference implementations used only by the tests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/random.hpp"

namespace oracle {

using lightspan::Edge;
using lightspan::VertexId;
using lightspan::WeightedGraph;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Edge relaxation to a fixed point.
inline std::vector<double> bellman_ford(const WeightedGraph& g, VertexId source) {
  std::vector<double> d(g.num_vertices(), kInf);
  d[static_cast<std::size_t>(source)] = 0.0;
  for (std::size_t round = 0; round < g.num_vertices(); ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      auto& du = d[static_cast<std::size_t>(e.u)];
      auto& dv = d[static_cast<std::size_t>(e.v)];
      if (du + e.w < dv) dv = du + e.w, changed = true;
      if (dv + e.w < du) du = dv + e.w, changed = true;
    }
    if (!changed) break;
  }
  return d;
}

inline std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0.0;
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    d[u][v] = std::min(d[u][v], e.w);
    d[v][u] = std::min(d[v][u], e.w);
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
  return d;
}

// Every simple path from source: returns, per target, the shortest length
// and the smallest bottleneck among paths of that length.
struct PathSummary {
  std::vector<double> length;
  std::vector<double> bottleneck;
};

inline PathSummary enumerate_simple_paths(const WeightedGraph& g, VertexId source) {
  const std::size_t n = g.num_vertices();
  PathSummary s{std::vector<double>(n, kInf), std::vector<double>(n, kInf)};
  std::vector<char> on_path(n, 0);
  auto visit = [&](auto&& self, VertexId v, double len, double heaviest) -> void {
    const auto vi = static_cast<std::size_t>(v);
    if (len < s.length[vi] || (len == s.length[vi] && heaviest < s.bottleneck[vi])) {
      s.length[vi] = len;
      s.bottleneck[vi] = heaviest;
    }
    on_path[vi] = 1;
    for (const auto& a : g.neighbors(v)) {
      if (!on_path[static_cast<std::size_t>(a.to)]) self(self, a.to, len + a.w, std::max(heaviest, a.w));
    }
    on_path[vi] = 0;
  };
  visit(visit, source, 0.0, 0.0);
  return s;
}

// Minimum weight over all (n-1)-edge subsets that form a spanning tree.
inline double min_spanning_tree_weight(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  double best = kInf;
  std::vector<char> pick(m, 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(n - 1), pick.end(), 1);
  do {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    bool acyclic = true;
    double w = 0.0;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!pick[i]) continue;
      const Edge& e = g.edge(static_cast<lightspan::EdgeId>(i));
      const auto a = find(static_cast<std::size_t>(e.u)), b = find(static_cast<std::size_t>(e.v));
      if (a == b) acyclic = false;
      parent[a] = b;
      w += e.w;
    }
    if (acyclic) best = std::min(best, w);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

// Connected graph with small integer weights, so equal-length paths are common.
inline WeightedGraph tie_heavy_graph(std::size_t n, double p, int max_w, std::uint64_t seed) {
  lightspan::Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<char> present(n * n, 0);
  auto add = [&](std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    if (u == v || present[u * n + v]) return;
    present[u * n + v] = 1;
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), static_cast<double>(1 + rng.below(max_w))});
  };
  for (std::size_t v = 1; v < n; ++v) add(v, rng.below(v));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) add(u, v);
  return WeightedGraph(n, std::move(edges));
}

}  // namespace oracle
