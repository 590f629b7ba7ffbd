// Minimum spanning trees and shallow-light trees.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

struct SpanningTree {
  std::optional<VertexId> root;
  // Host edge ids, ascending.
  std::vector<EdgeId> edges;
  double total_weight = 0.0;
};

/// Kruskal with ties broken by (w, min endpoint, max endpoint).
/// Throws StructuralError if g is disconnected.
SpanningTree mst(const WeightedGraph& g);

/// Weight stretch factor of the trees built by slt(): 1 + 2/eps.
double slt_weight_factor(double eps);

/// Shallow-light tree rooted at `root`: every root distance is within (1+eps)
/// of the graph distance and the weight is at most (1 + 2/eps) w(MST).
///
/// Built by walking the MST depth first (children in ascending id order) and
/// splicing in the shortest-path-tree route to a vertex whenever the walk has
/// drifted past (1+eps) times its true distance; the result is the
/// shortest-path tree of MST plus spliced routes.
SpanningTree slt(const WeightedGraph& g, VertexId root, double eps);

struct SltForest {
  // Host edge ids, ascending. Virtual edges are never included.
  std::vector<EdgeId> edges;
  // approx_pivot[u]: the root that u reaches inside the forest.
  std::vector<VertexId> approx_pivot;
  // forest_dist[u]: length of u's forest path to approx_pivot[u].
  std::vector<double> forest_dist;
};

/// SLT rooted at a virtual vertex tied to every root by a zero-weight edge,
/// with the virtual edges removed again.
SltForest slt_forest(const WeightedGraph& g, std::span<const VertexId> roots, double eps);

}  // namespace lightspan
