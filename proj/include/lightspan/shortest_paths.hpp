// Dijkstra variants used throughout the constructions and the verifier.

#pragma once

#include <limits>
#include <span>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Result of a (multi-source) Dijkstra run.
///
/// Labels are compared lexicographically by (dist, root, bottleneck): nearest
/// source first, smallest source id among equally near ones, then the
/// smallest heaviest edge among shortest paths from that source. Remaining
/// ties pick the smallest predecessor id. Vertices beyond the search radius
/// keep dist = +inf and no parent.
struct DistanceTable {
  std::vector<VertexId> sources;
  std::vector<double> dist;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<double> bottleneck;
  std::vector<VertexId> root;

  bool reached(VertexId v) const { return dist[static_cast<std::size_t>(v)] < kInfinity; }
  double operator[](VertexId v) const { return dist[static_cast<std::size_t>(v)]; }

  /// Tree path from the root of `target` to `target`; empty if unreached.
  Path path_to(VertexId target) const;
  /// Edge ids of that path, ordered from `target` towards its root.
  std::vector<EdgeId> edges_to(VertexId target) const;
};

DistanceTable dijkstra(const WeightedGraph& g, VertexId source);

/// Settles only vertices at distance <= radius.
DistanceTable dijkstra_within(const WeightedGraph& g, VertexId source, double radius);

/// Distance to the nearest source. Throws InputError on an empty source set.
DistanceTable multi_source_dijkstra(const WeightedGraph& g, std::span<const VertexId> sources);

/// Shortest u-v path with the tie-breaking rule above; [u] when u == v.
Path shortest_path(const WeightedGraph& g, VertexId u, VertexId v);

}  // namespace lightspan
