// Weighted undirected graph used by every construction in the library.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lightspan {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

// Error hierarchy. Every failure surfaced by the library derives from Error so
// callers (the CLI in particular) can report the stage that failed.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

// Undirected edge, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One direction of an edge as seen from its tail.
struct Arc {
  VertexId to;
  double w;
  EdgeId id;
};

/// Immutable weighted graph with dense vertex ids 0..n-1.
///
/// Invariants: no self loops, at most one edge per unordered pair, and all
/// weights strictly positive. Connectivity is not enforced here since
/// subgraphs and forests are also represented with this type; operations that
/// need it check it themselves.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws InputError if any edge breaks an invariant. Edge ids follow the
  /// order of `edges`; endpoints are normalized so that u < v.
  WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }

  // Incident arcs sorted by neighbour id.
  std::span<const Arc> neighbors(VertexId v) const {
    check_vertex(v);
    const auto begin = offsets_[static_cast<std::size_t>(v)];
    const auto end = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const Arc>(arcs_).subspan(begin, end - begin);
  }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  bool valid_vertex(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < num_vertices_;
  }
  void check_vertex(VertexId v) const {
    if (!valid_vertex(v)) {
      throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(num_vertices_) + ")");
    }
  }

  double total_weight() const noexcept;
  double max_weight() const noexcept;
  bool is_connected() const;
  bool allows_zero_weights() const noexcept { return allow_zero_; }

  /// Same topology with every weight multiplied by `factor` (> 0).
  WeightedGraph scaled(double factor) const;

  /// Graph on the same vertex set keeping only the listed edges. Edge k of the
  /// result corresponds to ids[k] of this graph.
  WeightedGraph subgraph(std::span<const EdgeId> ids) const;

  /// Copy of this graph plus one extra vertex (id n) joined to every root by
  /// a zero-weight edge. Host edge ids are preserved; virtual edges get ids
  /// m, m+1, ... in ascending root order. Only used for SLT forests.
  WeightedGraph with_virtual_root(std::span<const VertexId> roots) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  struct AllowZero {};
  WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges, AllowZero);
  void build(bool allow_zero);

  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
  bool allow_zero_ = false;
};

// Two graphs are equal up to edge order.
bool same_edge_set(const WeightedGraph& a, const WeightedGraph& b);

struct Path {
  std::vector<VertexId> vertices;
  double length = 0.0;
  double bottleneck = 0.0;
};

}  // namespace lightspan
