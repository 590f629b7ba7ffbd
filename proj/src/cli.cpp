#include "lightspan/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lightspan/serialization.hpp"
#include "lightspan/spanner.hpp"

namespace lightspan::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Writes through a temporary file so readers never see a partial artifact.
void write_atomically(const fs::path& file, const std::string& content) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  fs::rename(tmp, file);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string graph_extension(GraphFormat f) { return f == GraphFormat::edge_list ? ".edges" : ".dimacs"; }

std::string echo(const RunConfig& c) {
  std::ostringstream os;
  os << "command=" << to_string(c.command) << " input=" << c.input.string() << " output-dir=" << c.output_dir.string()
     << " eps=" << c.eps << " k=" << c.k << " seed=" << c.seed << " mode=" << lightspan::to_string(c.mode)
     << " sample-size=" << c.sample_size << " unsafe-eps=" << (c.unsafe_eps ? "true" : "false");
  return os.str();
}

// Remembers which pipeline stage is running for error reports.
struct Stage {
  std::string name = "config";
};

WeightedGraph load_input(const RunConfig& c, Stage& stage) {
  stage.name = "read_graph";
  return read_graph_file(c.input, c.graph_format).graph;
}

int do_gen(const RunConfig& c, Stage& stage, std::ostream& out) {
  stage.name = "generate_graph";
  const WeightedGraph g = generate_graph(c.family, c.generator, c.seed);
  stage.name = "write_graph";
  std::ostringstream os;
  write_graph(os, g, c.graph_format);
  const fs::path file = c.output_dir / ("graph" + graph_extension(c.graph_format));
  write_atomically(file, os.str());
  out << "wrote " << file.string() << " (n=" << g.num_vertices() << ", m=" << g.num_edges() << ")\n";
  return 0;
}

void write_spanner(const RunConfig& c, const Spanner& sp, const WeightedGraph& g, std::ostream& out) {
  const fs::path json_file = c.output_dir / "spanner.json";
  write_atomically(json_file, dump(to_json(sp, g)));
  std::ostringstream os;
  write_graph(os, sp.subgraph(g), GraphFormat::edge_list);
  const fs::path edges_file = c.output_dir / "spanner.edges";
  write_atomically(edges_file, os.str());
  out << "wrote " << json_file.string() << " and " << edges_file.string() << " (" << sp.edges.size()
      << " of " << g.num_edges() << " edges)\n";
}

int do_build(const RunConfig& c, Stage& stage, std::ostream& out, bool wmax) {
  const WeightedGraph g = load_input(c, stage);
  stage.name = wmax ? "build_wmax_spanner" : "build_spanner";
  const Spanner sp = wmax ? build_wmax_spanner(g, c.eps) : build_spanner(g, c.eps, c.k, c.seed, {c.unsafe_eps, false});
  stage.name = "write_spanner";
  write_spanner(c, sp, g, out);
  return 0;
}

int do_verify(const RunConfig& c, Stage& stage, std::ostream& out) {
  const WeightedGraph g = load_input(c, stage);
  stage.name = "read_spanner";
  std::ifstream in(c.spanner);
  if (!in) throw InputError("cannot open " + c.spanner.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed spanner JSON: ") + ex.what());
  }
  const Spanner sp = spanner_from_json(j, g);

  stage.name = "verify_stretch";
  const StretchReport stretch = verify_stretch(g, sp, c.mode, c.sample_size, c.seed);
  stage.name = "verify_lightness";
  const LightnessReport light = verify_lightness(g, sp);
  bool passed = stretch.passed();

  stage.name = "write_reports";
  if (c.format == ReportFormat::csv) {
    SweepRow row{g.num_vertices(), sp.params.k, sp.params.eps, sp.params.seed, light.size, light.lightness,
                 stretch.worst_mult_stretch, stretch.worst_additive_slack, stretch.bound_used, 0.0};
    write_atomically(c.output_dir / "verify.csv", sweep_csv_preamble() + to_csv_row(row));
  } else {
    write_atomically(c.output_dir / "stretch.json", dump(to_json(stretch)));
    write_atomically(c.output_dir / "lightness.json", dump(to_json(light)));
  }

  if (c.lemmas) {
    if (sp.kind != SpannerKind::near_additive) throw ParameterError("lemma checks apply to near-additive spanners only");
    stage.name = "verify_lemma_suite";
    const SpannerConstruction rebuilt =
        construct_spanner(g, sp.params.eps, sp.params.k, sp.params.seed, {sp.params.unsafe_eps, true});
    if (rebuilt.spanner.edges != sp.edges) {
      throw StructuralError("rebuilding from the recorded parameters does not reproduce the spanner");
    }
    const LemmaSuiteReport lemmas = verify_lemma_suite(rebuilt, sp);
    write_atomically(c.output_dir / "lemmas.json", dump(to_json(lemmas)));
    passed = passed && lemmas.passed();
  }

  out << "stretch: pairs=" << stretch.pairs_checked << " worst_mult=" << stretch.worst_mult_stretch
      << " worst_slack=" << stretch.worst_additive_slack << " bound=" << stretch.bound_used
      << " violations=" << stretch.violation_count + stretch.lower_bound_failures << '\n'
      << "lightness: " << light.lightness << " size=" << light.size << '\n'
      << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? 0 : 1;
}

int do_inspect(const RunConfig& c, Stage& stage, std::ostream& out) {
  const WeightedGraph g = load_input(c, stage);
  stage.name = "normalize";
  const Normalized norm = normalize(g);
  stage.name = "build_net_hierarchy";
  const NetHierarchy h = build_net_hierarchy(norm.graph, c.eps, c.unsafe_eps);
  json j = to_json(h);
  j["scale"] = norm.scale;
  j["h0_weight"] = h0_weight(norm.graph, h);
  stage.name = "write_hierarchy";
  const fs::path file = c.output_dir / "hierarchy.json";
  write_atomically(file, dump(j));
  out << "wrote " << file.string() << " (top level " << h.top_level() << ", " << h.h0_edges().size()
      << " H0 edges)\n";
  return 0;
}

int do_sweep(const RunConfig& c, Stage& stage, std::ostream& out) {
  if (c.sweep_n.empty() || c.sweep_k.empty() || c.sweep_eps.empty()) {
    throw ParameterError("sweep needs non-empty --n, --k and --eps lists");
  }
  const fs::path file = c.output_dir / "sweep.csv";
  std::string content = sweep_csv_preamble();
  write_atomically(file, content);
  bool passed = true;
  for (std::size_t n : c.sweep_n) {
    for (int k : c.sweep_k) {
      for (double eps : c.sweep_eps) {
        for (std::size_t s = 0; s < c.sweep_seeds; ++s) {
          const std::uint64_t seed = c.seed + s;
          GeneratorParams params = c.generator;
          params.n = n;
          stage.name = "generate_graph";
          const WeightedGraph g = generate_graph(c.family, params, seed);
          stage.name = "build_spanner";
          const auto start = std::chrono::steady_clock::now();
          const Spanner sp = build_spanner(g, eps, k, seed, {c.unsafe_eps, false});
          const auto stop = std::chrono::steady_clock::now();
          stage.name = "verify_stretch";
          const StretchReport stretch = verify_stretch(g, sp, c.mode, c.sample_size, seed);
          const LightnessReport light = verify_lightness(g, sp);
          passed = passed && stretch.passed();
          const SweepRow row{n, k, eps, seed, light.size, light.lightness, stretch.worst_mult_stretch,
                             stretch.worst_additive_slack, stretch.bound_used,
                             std::chrono::duration<double, std::milli>(stop - start).count()};
          content += to_csv_row(row);
          stage.name = "write_sweep";
          write_atomically(file, content);
          out << to_csv_row(row);
        }
      }
    }
  }
  return passed ? 0 : 1;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::gen: return "gen";
    case Command::build: return "build";
    case Command::build_wmax: return "build-wmax";
    case Command::verify: return "verify";
    case Command::inspect: return "inspect";
    case Command::sweep: return "sweep";
  }
  return "?";
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "edge_list") return ReportFormat::edge_list;
  throw ParameterError("unknown output format '" + std::string(name) + "'");
}

void validate(const RunConfig& c) {
  const bool uses_eps = c.command != Command::gen;
  if (uses_eps) {
    if (!(c.eps > 0.0)) throw ParameterError("--eps must be positive");
    if (!c.unsafe_eps && !(c.eps < 0.1)) throw ParameterError("--eps must lie in (0, 0.1); pass --unsafe-eps to override");
    for (double e : c.sweep_eps) {
      if (!(e > 0.0) || (!c.unsafe_eps && !(e < 0.1))) throw ParameterError("sweep eps values must lie in (0, 0.1)");
    }
  }
  if (c.k < 1) throw ParameterError("--k must be at least 1");
  for (int k : c.sweep_k) {
    if (k < 1) throw ParameterError("sweep k values must be at least 1");
  }
  const bool needs_input = c.command == Command::build || c.command == Command::build_wmax ||
                           c.command == Command::verify || c.command == Command::inspect;
  if (needs_input && c.input.empty()) throw ParameterError("--input is required for " + to_string(c.command));
  if (c.command == Command::verify && c.spanner.empty()) throw ParameterError("--spanner is required for verify");
  if (c.mode == VerifyMode::sampled && c.sample_size == 0) throw ParameterError("--mode sampled needs --sample-size");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Stage stage;
  try {
    validate(config);
    switch (config.command) {
      case Command::gen: return do_gen(config, stage, out);
      case Command::build: return do_build(config, stage, out, false);
      case Command::build_wmax: return do_build(config, stage, out, true);
      case Command::verify: return do_verify(config, stage, out);
      case Command::inspect: return do_inspect(config, stage, out);
      case Command::sweep: return do_sweep(config, stage, out);
    }
  } catch (const std::exception& ex) {
    err << "error in stage " << stage.name << ": " << ex.what() << "\n  config: " << echo(config) << '\n';
    return 2;
  }
  return 2;
}

}  // namespace lightspan::cli
