#include "lightspan/generators.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "lightspan/random.hpp"

namespace lightspan {
namespace {

double draw_weight(Rng& rng, const GeneratorParams& params) {
  if (params.min_weight == params.max_weight) return params.min_weight;
  return rng.uniform(params.min_weight, params.max_weight);
}

std::vector<Edge> erdos_renyi(const GeneratorParams& params, Rng& rng) {
  std::vector<Edge> edges;
  const auto n = static_cast<VertexId>(params.n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(params.p)) edges.push_back(Edge{u, v, draw_weight(rng, params)});
    }
  }
  return edges;
}

std::vector<Edge> geometric(const GeneratorParams& params, Rng& rng) {
  const std::size_t n = params.n;
  double radius = params.radius;
  if (radius <= 0.0) {
    radius = 1.5 * std::sqrt(std::log(static_cast<double>(n)) / (std::numbers::pi * static_cast<double>(n)));
  }
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = rng.uniform();
    ys[i] = rng.uniform();
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double d = std::hypot(xs[u] - xs[v], ys[u] - ys[v]);
      if (d > radius || d == 0.0) continue;
      const double w = params.euclidean_weights ? d : draw_weight(rng, params);
      edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    }
  }
  return edges;
}

std::vector<Edge> grid(const GeneratorParams& params, Rng& rng) {
  const auto n = static_cast<VertexId>(params.n);
  const auto cols = static_cast<VertexId>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) {
    if ((v + 1) % cols != 0 && v + 1 < n) edges.push_back(Edge{v, v + 1, draw_weight(rng, params)});
    if (v + cols < n) edges.push_back(Edge{v, v + cols, draw_weight(rng, params)});
  }
  return edges;
}

std::vector<Edge> path(const GeneratorParams& params, Rng& rng) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < static_cast<VertexId>(params.n); ++v) {
    edges.push_back(Edge{v, v + 1, draw_weight(rng, params)});
  }
  return edges;
}

std::vector<Edge> star(const GeneratorParams& params, Rng& rng) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < static_cast<VertexId>(params.n); ++v) {
    edges.push_back(Edge{0, v, draw_weight(rng, params)});
  }
  return edges;
}

}  // namespace

GraphFamily parse_family(std::string_view name) {
  if (name == "erdos_renyi") return GraphFamily::erdos_renyi;
  if (name == "geometric_unit_square" || name == "geometric") return GraphFamily::geometric_unit_square;
  if (name == "grid") return GraphFamily::grid;
  if (name == "path") return GraphFamily::path;
  if (name == "star") return GraphFamily::star;
  throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::erdos_renyi: return "erdos_renyi";
    case GraphFamily::geometric_unit_square: return "geometric_unit_square";
    case GraphFamily::grid: return "grid";
    case GraphFamily::path: return "path";
    case GraphFamily::star: return "star";
  }
  return "unknown";
}

WeightedGraph generate_graph(GraphFamily family, const GeneratorParams& params, std::uint64_t seed) {
  if (params.n < 2) throw ParameterError("generated graphs need n >= 2");
  if (!(params.min_weight > 0.0) || params.max_weight < params.min_weight) {
    throw ParameterError("weight range must satisfy 0 < min_weight <= max_weight");
  }
  if (family == GraphFamily::erdos_renyi && !(params.p > 0.0 && params.p <= 1.0)) {
    throw ParameterError("erdos_renyi needs 0 < p <= 1");
  }
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<Edge> edges;
    switch (family) {
      case GraphFamily::erdos_renyi: edges = erdos_renyi(params, rng); break;
      case GraphFamily::geometric_unit_square: edges = geometric(params, rng); break;
      case GraphFamily::grid: edges = grid(params, rng); break;
      case GraphFamily::path: edges = path(params, rng); break;
      case GraphFamily::star: edges = star(params, rng); break;
    }
    WeightedGraph g(params.n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw GenerationError("no connected " + to_string(family) + " sample with n=" + std::to_string(params.n) +
                        " after " + std::to_string(params.max_retries) + " retries");
}

}  // namespace lightspan
