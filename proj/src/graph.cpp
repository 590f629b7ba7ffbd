#include "lightspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <utility>

namespace lightspan {

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  build(false);
}

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges, AllowZero)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  build(true);
}

void WeightedGraph::build(bool allow_zero) {
  allow_zero_ = allow_zero;
  std::vector<std::size_t> degree(num_vertices_ + 1, 0);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    Edge& e = edges_[id];
    if (!valid_vertex(e.u) || !valid_vertex(e.v)) {
      throw InputError("edge " + std::to_string(id) + " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw InputError("self loop at vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.w) || e.w < 0.0 || (e.w == 0.0 && !allow_zero)) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has non-positive weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }

  offsets_.assign(num_vertices_ + 1, 0);
  for (std::size_t v = 0; v < num_vertices_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  arcs_.assign(offsets_.back(), Arc{});
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    const auto eid = static_cast<EdgeId>(id);
    arcs_[cursor[static_cast<std::size_t>(e.u)]++] = Arc{e.v, e.w, eid};
    arcs_[cursor[static_cast<std::size_t>(e.v)]++] = Arc{e.u, e.w, eid};
  }
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Arc& a, const Arc& b) { return a.to < b.to; });
    auto dup = std::adjacent_find(first, last, [](const Arc& a, const Arc& b) { return a.to == b.to; });
    if (dup != last) {
      throw InputError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(dup->to) + ")");
    }
  }
}

std::optional<EdgeId> WeightedGraph::find_edge(VertexId u, VertexId v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return std::nullopt;
  const auto arcs = neighbors(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, VertexId target) { return a.to < target; });
  if (it == arcs.end() || it->to != v) return std::nullopt;
  return it->id;
}

double WeightedGraph::total_weight() const noexcept {
  double sum = 0.0;
  for (const Edge& e : edges_) sum += e.w;
  return sum;
}

double WeightedGraph::max_weight() const noexcept {
  double best = 0.0;
  for (const Edge& e : edges_) best = std::max(best, e.w);
  return best;
}

bool WeightedGraph::is_connected() const {
  if (num_vertices_ <= 1) return true;
  std::vector<char> seen(num_vertices_, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Arc& a : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(a.to)]) {
        seen[static_cast<std::size_t>(a.to)] = 1;
        ++reached;
        stack.push_back(a.to);
      }
    }
  }
  return reached == num_vertices_;
}

WeightedGraph WeightedGraph::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ParameterError("scale factor must be positive and finite");
  }
  std::vector<Edge> out = edges_;
  for (Edge& e : out) e.w *= factor;
  if (allow_zero_) return WeightedGraph(num_vertices_, std::move(out), AllowZero{});
  return WeightedGraph(num_vertices_, std::move(out));
}

WeightedGraph WeightedGraph::subgraph(std::span<const EdgeId> ids) const {
  std::vector<Edge> out;
  out.reserve(ids.size());
  for (EdgeId id : ids) out.push_back(edge(id));
  if (allow_zero_) return WeightedGraph(num_vertices_, std::move(out), AllowZero{});
  return WeightedGraph(num_vertices_, std::move(out));
}

WeightedGraph WeightedGraph::with_virtual_root(std::span<const VertexId> roots) const {
  std::vector<VertexId> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Edge> out = edges_;
  const auto virtual_root = static_cast<VertexId>(num_vertices_);
  for (VertexId r : sorted) {
    check_vertex(r);
    out.push_back(Edge{r, virtual_root, 0.0});
  }
  return WeightedGraph(num_vertices_ + 1, std::move(out), AllowZero{});
}

bool same_edge_set(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto key = [](const Edge& e) { return std::tuple(e.u, e.v, e.w); };
  std::vector<Edge> ea(a.edges().begin(), a.edges().end());
  std::vector<Edge> eb(b.edges().begin(), b.edges().end());
  auto less = [&](const Edge& x, const Edge& y) { return key(x) < key(y); };
  std::sort(ea.begin(), ea.end(), less);
  std::sort(eb.begin(), eb.end(), less);
  return ea == eb;
}

}  // namespace lightspan
