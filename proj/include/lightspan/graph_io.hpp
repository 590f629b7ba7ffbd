// Text formats for graphs.
//
// edge_list: first non-comment line is n, every further line is `u v w` with
// 0-based ids. dimacs: `p sp n m` header and `a u v w` lines with 1-based ids,
// one line per undirected edge. Lines starting with '#' (edge_list) or 'c'
// (dimacs) are comments.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

enum class GraphFormat { edge_list, dimacs };

GraphFormat parse_graph_format(std::string_view name);

struct LoadedGraph {
  WeightedGraph graph;
  // original_ids[v] is the id vertex v carried in the file.
  std::vector<std::int64_t> original_ids;
};

LoadedGraph read_graph(std::istream& in, GraphFormat format);
LoadedGraph read_graph_file(const std::filesystem::path& file, GraphFormat format);

void write_graph(std::ostream& out, const WeightedGraph& g, GraphFormat format);
void write_graph_file(const std::filesystem::path& file, const WeightedGraph& g, GraphFormat format);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace lightspan
