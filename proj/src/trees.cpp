#include "lightspan/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "lightspan/shortest_paths.hpp"

namespace lightspan {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive, got " + std::to_string(eps));
}

struct LastTree {
  std::vector<EdgeId> edges;  // ids of g
  DistanceTable dist;         // tree distances from the root
};

// Light approximate shortest-path tree over g (zero weights allowed).
LastTree build_last(const WeightedGraph& g, VertexId root, double eps) {
  const std::size_t n = g.num_vertices();
  const SpanningTree tree = mst(g);

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacent(n);
  for (EdgeId id : tree.edges) {
    const Edge& e = g.edge(id);
    adjacent[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
    adjacent[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
  }
  for (auto& list : adjacent) std::sort(list.begin(), list.end());

  const DistanceTable spt = dijkstra(g, root);
  const double alpha = 1.0 + eps;
  std::vector<double> d(n, kInfinity);
  d[static_cast<std::size_t>(root)] = 0.0;
  std::vector<char> in_h(g.num_edges(), 0);
  for (EdgeId id : tree.edges) in_h[static_cast<std::size_t>(id)] = 1;

  auto relax = [&](VertexId from, VertexId to, double w) {
    auto& target = d[static_cast<std::size_t>(to)];
    target = std::min(target, d[static_cast<std::size_t>(from)] + w);
  };

  std::vector<VertexId> chain;
  auto add_path = [&](VertexId v) {
    chain.clear();
    for (VertexId x = v; d[static_cast<std::size_t>(x)] > spt[x]; x = spt.parent[static_cast<std::size_t>(x)]) {
      in_h[static_cast<std::size_t>(spt.parent_edge[static_cast<std::size_t>(x)])] = 1;
      chain.push_back(x);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const auto xi = static_cast<std::size_t>(*it);
      relax(spt.parent[xi], *it, g.edge(spt.parent_edge[xi]).w);
    }
  };
  auto enter = [&](VertexId v) {
    if (d[static_cast<std::size_t>(v)] > alpha * spt[v]) add_path(v);
  };

  // Depth-first walk of the MST; each child is relaxed on the way down and
  // its parent on the way back up.
  struct Frame {
    VertexId vertex;
    VertexId parent;
    double parent_weight;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  enter(root);
  stack.push_back(Frame{root, kNoVertex, 0.0, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& kids = adjacent[static_cast<std::size_t>(top.vertex)];
    if (top.next_child < kids.size()) {
      const auto [child, id] = kids[top.next_child++];
      if (child == top.parent) continue;
      const double w = g.edge(id).w;
      relax(top.vertex, child, w);
      enter(child);
      stack.push_back(Frame{child, top.vertex, w, 0});
      continue;
    }
    const Frame done = top;
    stack.pop_back();
    if (done.parent != kNoVertex) relax(done.vertex, done.parent, done.parent_weight);
  }

  std::vector<EdgeId> h_edges;
  for (std::size_t id = 0; id < in_h.size(); ++id) {
    if (in_h[id]) h_edges.push_back(static_cast<EdgeId>(id));
  }
  const WeightedGraph h = g.subgraph(h_edges);
  LastTree out{{}, dijkstra(h, root)};
  for (std::size_t v = 0; v < n; ++v) {
    EdgeId& pe = out.dist.parent_edge[v];
    if (pe == kNoEdge) continue;
    pe = h_edges[static_cast<std::size_t>(pe)];
    out.edges.push_back(pe);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

SpanningTree mst(const WeightedGraph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    return std::tie(x.w, x.u, x.v) < std::tie(y.w, y.u, y.v);
  });
  DisjointSets sets(g.num_vertices());
  SpanningTree tree;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    if (sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
      tree.edges.push_back(id);
      tree.total_weight += e.w;
    }
  }
  if (g.num_vertices() > 0 && tree.edges.size() + 1 != g.num_vertices()) {
    throw StructuralError("graph is disconnected; no spanning tree exists");
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

double slt_weight_factor(double eps) { return 1.0 + 2.0 / eps; }

SpanningTree slt(const WeightedGraph& g, VertexId root, double eps) {
  check_eps(eps);
  g.check_vertex(root);
  if (!g.is_connected()) throw StructuralError("shallow-light tree needs a connected graph");
  LastTree last = build_last(g, root, eps);
  SpanningTree tree;
  tree.root = root;
  tree.edges = std::move(last.edges);
  for (EdgeId id : tree.edges) tree.total_weight += g.edge(id).w;
  return tree;
}

SltForest slt_forest(const WeightedGraph& g, std::span<const VertexId> roots, double eps) {
  check_eps(eps);
  if (roots.empty()) throw InputError("SLT forest needs at least one root");
  if (!g.is_connected()) throw StructuralError("shallow-light forest needs a connected graph");
  const std::size_t n = g.num_vertices();
  const WeightedGraph augmented = g.with_virtual_root(roots);
  const auto virtual_root = static_cast<VertexId>(n);
  const LastTree last = build_last(augmented, virtual_root, eps);

  SltForest forest;
  for (EdgeId id : last.edges) {
    if (static_cast<std::size_t>(id) < g.num_edges()) forest.edges.push_back(id);
  }
  forest.approx_pivot.assign(n, kNoVertex);
  forest.forest_dist.assign(n, 0.0);
  std::vector<VertexId> climb;
  for (std::size_t u = 0; u < n; ++u) {
    forest.forest_dist[u] = last.dist.dist[u];
    VertexId x = static_cast<VertexId>(u);
    climb.clear();
    while (forest.approx_pivot[static_cast<std::size_t>(x)] == kNoVertex &&
           last.dist.parent[static_cast<std::size_t>(x)] != virtual_root) {
      climb.push_back(x);
      x = last.dist.parent[static_cast<std::size_t>(x)];
    }
    if (forest.approx_pivot[static_cast<std::size_t>(x)] == kNoVertex) forest.approx_pivot[static_cast<std::size_t>(x)] = x;
    const VertexId pivot = forest.approx_pivot[static_cast<std::size_t>(x)];
    for (VertexId y : climb) forest.approx_pivot[static_cast<std::size_t>(y)] = pivot;
  }
  return forest;
}

}  // namespace lightspan
