// Seeded random and structured graph families.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lightspan/graph.hpp"

namespace lightspan {

enum class GraphFamily { erdos_renyi, geometric_unit_square, grid, path, star };

GraphFamily parse_family(std::string_view name);
std::string to_string(GraphFamily family);

struct GeneratorParams {
  std::size_t n = 0;
  // Edge probability for erdos_renyi.
  double p = 0.0;
  // Connection radius for geometric_unit_square; 0 picks a radius slightly
  // above the connectivity threshold sqrt(ln n / (pi n)).
  double radius = 0.0;
  // Weights are drawn uniformly from [min_weight, max_weight].
  double min_weight = 1.0;
  double max_weight = 1.0;
  // geometric_unit_square only: use Euclidean edge length as the weight.
  bool euclidean_weights = true;
  // Disconnected samples are redrawn with seed+1, seed+2, ...
  int max_retries = 64;
};

/// Deterministic for fixed (family, params, seed). Vertex 0 is the star
/// centre; grid vertices are laid out row-major with ceil(sqrt n) columns.
/// Throws ParameterError on bad params and GenerationError when no connected
/// sample is found within the retry budget.
WeightedGraph generate_graph(GraphFamily family, const GeneratorParams& params, std::uint64_t seed);

}  // namespace lightspan
