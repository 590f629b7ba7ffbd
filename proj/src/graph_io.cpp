#include "lightspan/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace lightspan {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("cannot parse ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

// Collects edges while enforcing the graph invariants with line numbers.
class EdgeCollector {
 public:
  explicit EdgeCollector(std::size_t n) : n_(n) {}

  void add(std::int64_t u, std::int64_t v, double w, std::size_t line) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
      throw ParseError(line, "vertex id out of range");
    }
    if (u == v) throw ParseError(line, "self loop");
    if (!std::isfinite(w) || w <= 0.0) throw ParseError(line, "weight must be positive");
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    if (!seen_.insert(lo * n_ + hi).second) throw ParseError(line, "duplicate edge");
    edges_.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }

  std::vector<Edge> take() { return std::move(edges_); }

 private:
  std::size_t n_;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<Edge> edges_;
};

LoadedGraph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> n;
  std::optional<EdgeCollector> edges;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    if (!n) {
      if (tokens.size() != 1) throw ParseError(line, "expected vertex count");
      n = parse_number<std::size_t>(tokens[0], line, "vertex count");
      edges.emplace(*n);
      continue;
    }
    if (tokens.size() != 3) throw ParseError(line, "expected 'u v w'");
    edges->add(parse_number<std::int64_t>(tokens[0], line, "vertex id"),
               parse_number<std::int64_t>(tokens[1], line, "vertex id"),
               parse_number<double>(tokens[2], line, "weight"), line);
  }
  if (!n) throw ParseError(line, "missing vertex count");
  LoadedGraph out{WeightedGraph(*n, edges->take()), {}};
  out.original_ids.resize(*n);
  for (std::size_t v = 0; v < *n; ++v) out.original_ids[v] = static_cast<std::int64_t>(v);
  return out;
}

LoadedGraph read_dimacs(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::optional<EdgeCollector> edges;
  std::size_t count = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n) throw ParseError(line, "second problem line");
      if (tokens.size() != 4 || tokens[1] != "sp") throw ParseError(line, "expected 'p sp n m'");
      n = parse_number<std::size_t>(tokens[2], line, "vertex count");
      declared_edges = parse_number<std::size_t>(tokens[3], line, "edge count");
      edges.emplace(*n);
      continue;
    }
    if (tokens[0] == "a") {
      if (!n) throw ParseError(line, "arc before problem line");
      if (tokens.size() != 4) throw ParseError(line, "expected 'a u v w'");
      edges->add(parse_number<std::int64_t>(tokens[1], line, "vertex id") - 1,
                 parse_number<std::int64_t>(tokens[2], line, "vertex id") - 1,
                 parse_number<double>(tokens[3], line, "weight"), line);
      ++count;
      continue;
    }
    throw ParseError(line, "unknown line type '" + std::string(tokens[0]) + "'");
  }
  if (!n) throw ParseError(line, "missing problem line");
  if (count != declared_edges) {
    throw ParseError(line, "problem line declares " + std::to_string(declared_edges) + " arcs, found " +
                               std::to_string(count));
  }
  LoadedGraph out{WeightedGraph(*n, edges->take()), {}};
  out.original_ids.resize(*n);
  for (std::size_t v = 0; v < *n; ++v) out.original_ids[v] = static_cast<std::int64_t>(v) + 1;
  return out;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge_list") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw ParameterError("unknown graph format '" + std::string(name) + "'");
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

LoadedGraph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::edge_list ? read_edge_list(in) : read_dimacs(in);
}

LoadedGraph read_graph_file(const std::filesystem::path& file, GraphFormat format) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file.string());
  return read_graph(in, format);
}

void write_graph(std::ostream& out, const WeightedGraph& g, GraphFormat format) {
  if (format == GraphFormat::edge_list) {
    out << g.num_vertices() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
    return;
  }
  out << "p sp " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << format_double(e.w) << '\n';
  }
}

void write_graph_file(const std::filesystem::path& file, const WeightedGraph& g, GraphFormat format) {
  std::ofstream out(file);
  if (!out) throw InputError("cannot write " + file.string());
  write_graph(out, g, format);
}

}  // namespace lightspan
