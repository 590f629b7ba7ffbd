// Greedy nets, the nested net hierarchy and its light path system H0.

#pragma once

#include <span>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

// Covering: every vertex within `delta` of some member.
// Packing: distinct members are more than `delta` apart.
struct DeltaNet {
  double delta = 0.0;
  std::vector<VertexId> members;  // ascending
};

/// Extends `seed_set` to a delta-net by scanning vertices in ascending id
/// order and adding every vertex still farther than delta from the net.
/// Throws PreconditionError if the seed set already violates packing.
DeltaNet greedy_delta_net(const WeightedGraph& g, double delta, std::span<const VertexId> seed_set);

/// Smallest t >= 1 with 2^-t <= eps: how many levels each H0 path climbs.
int climb_step(double eps);

/// Nested nets N_top ⊆ ... ⊆ N_0 ⊆ N_{-1} = V, N_i a 2^i-net, together with
/// the path system H0 and the representative table.
///
/// Every v ∈ N_i \ N_{i+1} owns shortest paths to its nearest point of N_j for
/// j = i+1 .. i+t (t = climb_step(eps), j capped at the top level). Chaining
/// those paths t levels at a time gives rep(v, i) with
/// d_H0(v, rep(v, i)) <= (1 + 2 eps) 2^i whenever eps < 1/10.
class NetHierarchy {
 public:
  double eps() const noexcept { return eps_; }
  int top_level() const noexcept { return top_level_; }
  int step() const noexcept { return step_; }
  // MST weight of the graph the hierarchy was built on; bounds the diameter.
  double mst_weight() const noexcept { return mst_weight_; }
  std::size_t num_vertices() const noexcept { return net_level_.size(); }

  // Level i in [-1, top_level()]. Level -1 is the whole vertex set.
  const DeltaNet& level(int i) const { return levels_.at(static_cast<std::size_t>(i + 1)); }
  // Highest level whose net contains v.
  int net_level(VertexId v) const { return net_level_.at(static_cast<std::size_t>(v)); }
  bool in_net(VertexId v, int i) const { return net_level(v) >= i; }

  /// Representative of v at level i; v itself for i < 0 or v ∈ N_i.
  VertexId rep(VertexId v, int i) const;

  /// Nearest point of N_j to v (ties by smallest id) and its distance.
  VertexId nearest(VertexId v, int j) const;
  double nearest_dist(VertexId v, int j) const;

  // Distinct host edge ids of H0, ascending.
  const std::vector<EdgeId>& h0_edges() const noexcept { return h0_edges_; }

 private:
  friend NetHierarchy build_net_hierarchy(const WeightedGraph& g, double eps, bool unsafe_eps);

  double eps_ = 0.0;
  int top_level_ = 0;
  int step_ = 1;
  double mst_weight_ = 0.0;
  std::vector<DeltaNet> levels_;
  std::vector<int> net_level_;
  // Row-major [level j in 0..top][vertex].
  std::vector<VertexId> nearest_;
  std::vector<double> nearest_dist_;
  std::vector<VertexId> rep_;
  std::vector<EdgeId> h0_edges_;
};

/// Builds nets top-down, each seeded by the level above, then H0 and the
/// representative table. Expects g normalized (w(MST) = n). eps must lie in
/// (0, 1/10) unless `unsafe_eps` is set, in which case the representative
/// bound is no longer guaranteed.
NetHierarchy build_net_hierarchy(const WeightedGraph& g, double eps, bool unsafe_eps = false);

double h0_weight(const WeightedGraph& g, const NetHierarchy& h);

}  // namespace lightspan
