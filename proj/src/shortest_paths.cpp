#include "lightspan/shortest_paths.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace lightspan {
namespace {

struct Label {
  double dist;
  VertexId root;
  double bottleneck;

  auto key() const { return std::tie(dist, root, bottleneck); }
  friend bool operator<(const Label& a, const Label& b) { return a.key() < b.key(); }
  friend bool operator==(const Label& a, const Label& b) { return a.key() == b.key(); }
};

struct Entry {
  Label label;
  VertexId vertex;
};

struct EntryAfter {
  bool operator()(const Entry& a, const Entry& b) const {
    if (b.label < a.label) return true;
    if (a.label < b.label) return false;
    return b.vertex < a.vertex;
  }
};

DistanceTable run_dijkstra(const WeightedGraph& g, std::span<const VertexId> sources, double radius) {
  const std::size_t n = g.num_vertices();
  DistanceTable t;
  t.sources.assign(sources.begin(), sources.end());
  std::sort(t.sources.begin(), t.sources.end());
  t.sources.erase(std::unique(t.sources.begin(), t.sources.end()), t.sources.end());
  if (t.sources.empty()) throw InputError("shortest-path search needs at least one source");
  for (VertexId s : t.sources) g.check_vertex(s);

  t.dist.assign(n, kInfinity);
  t.parent.assign(n, kNoVertex);
  t.parent_edge.assign(n, kNoEdge);
  t.bottleneck.assign(n, kInfinity);
  t.root.assign(n, kNoVertex);

  auto label_of = [&](VertexId v) {
    const auto i = static_cast<std::size_t>(v);
    return Label{t.dist[i], t.root[i], t.bottleneck[i]};
  };

  std::vector<char> settled(n, 0);
  std::vector<char> is_source(n, 0);
  std::priority_queue<Entry, std::vector<Entry>, EntryAfter> queue;
  for (VertexId s : t.sources) {
    const auto i = static_cast<std::size_t>(s);
    is_source[i] = 1;
    t.dist[i] = 0.0;
    t.root[i] = s;
    t.bottleneck[i] = 0.0;
    queue.push(Entry{label_of(s), s});
  }

  while (!queue.empty()) {
    const Entry top = queue.top();
    queue.pop();
    const VertexId v = top.vertex;
    const auto vi = static_cast<std::size_t>(v);
    if (settled[vi] || !(top.label == label_of(v))) continue;
    if (top.label.dist > radius) break;
    settled[vi] = 1;
    for (const Arc& a : g.neighbors(v)) {
      const auto ti = static_cast<std::size_t>(a.to);
      if (settled[ti] || is_source[ti]) continue;
      const Label candidate{t.dist[vi] + a.w, t.root[vi], std::max(t.bottleneck[vi], a.w)};
      const Label current = label_of(a.to);
      if (candidate < current) {
        t.dist[ti] = candidate.dist;
        t.root[ti] = candidate.root;
        t.bottleneck[ti] = candidate.bottleneck;
        t.parent[ti] = v;
        t.parent_edge[ti] = a.id;
        queue.push(Entry{candidate, a.to});
      } else if (candidate == current && v < t.parent[ti]) {
        t.parent[ti] = v;
        t.parent_edge[ti] = a.id;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (settled[i]) continue;
    t.dist[i] = kInfinity;
    t.parent[i] = kNoVertex;
    t.parent_edge[i] = kNoEdge;
    t.bottleneck[i] = kInfinity;
    t.root[i] = kNoVertex;
  }
  return t;
}

}  // namespace

Path DistanceTable::path_to(VertexId target) const {
  Path p;
  if (!reached(target)) return p;
  for (VertexId v = target; v != kNoVertex; v = parent[static_cast<std::size_t>(v)]) {
    p.vertices.push_back(v);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  p.length = dist[static_cast<std::size_t>(target)];
  p.bottleneck = bottleneck[static_cast<std::size_t>(target)];
  return p;
}

std::vector<EdgeId> DistanceTable::edges_to(VertexId target) const {
  std::vector<EdgeId> out;
  if (!reached(target)) return out;
  for (VertexId v = target; parent[static_cast<std::size_t>(v)] != kNoVertex;
       v = parent[static_cast<std::size_t>(v)]) {
    out.push_back(parent_edge[static_cast<std::size_t>(v)]);
  }
  return out;
}

DistanceTable dijkstra(const WeightedGraph& g, VertexId source) {
  const VertexId s[] = {source};
  return run_dijkstra(g, s, kInfinity);
}

DistanceTable dijkstra_within(const WeightedGraph& g, VertexId source, double radius) {
  const VertexId s[] = {source};
  return run_dijkstra(g, s, radius);
}

DistanceTable multi_source_dijkstra(const WeightedGraph& g, std::span<const VertexId> sources) {
  return run_dijkstra(g, sources, kInfinity);
}

Path shortest_path(const WeightedGraph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return Path{{u}, 0.0, 0.0};
  return dijkstra(g, u).path_to(v);
}

}  // namespace lightspan
