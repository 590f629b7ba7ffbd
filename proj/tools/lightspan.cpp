// lightspan: build and certify light near-additive spanners.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lightspan/cli.hpp"

namespace {

using lightspan::cli::Command;
using lightspan::cli::RunConfig;

struct RawFlags {
  std::string graph_format = "edge_list";
  std::string format = "json";
  std::string mode = "all_pairs";
  std::string family = "geometric_unit_square";
};

void add_common(CLI::App* app, RunConfig& c, RawFlags& raw) {
  app->add_option("--output-dir", c.output_dir, "Directory for generated artifacts")->capture_default_str();
  app->add_option("--graph-format", raw.graph_format, "Graph file format: edge_list or dimacs")
      ->capture_default_str();
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

void add_spanner_params(CLI::App* app, RunConfig& c) {
  app->add_option("--eps", c.eps, "Stretch parameter, in (0, 0.1)")->capture_default_str();
  app->add_option("--k", c.k, "Number of sampled levels")->capture_default_str();
  app->add_flag("--unsafe-eps", c.unsafe_eps, "Accept eps >= 0.1 (guarantee checks become meaningless)");
}

void add_generator(CLI::App* app, RunConfig& c, RawFlags& raw) {
  app->add_option("--family", raw.family, "erdos_renyi | geometric_unit_square | grid | path | star")
      ->capture_default_str();
  app->add_option("--p", c.generator.p, "Edge probability (erdos_renyi)");
  app->add_option("--radius", c.generator.radius, "Connection radius (geometric; 0 = automatic)");
  app->add_option("--min-weight", c.generator.min_weight, "Lower end of the weight range")->capture_default_str();
  app->add_option("--max-weight", c.generator.max_weight, "Upper end of the weight range")->capture_default_str();
  app->add_flag("!--random-weights", c.generator.euclidean_weights,
                "Geometric graphs: draw weights from the range instead of using edge lengths");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Light near-additive spanners: generate graphs, build spanners, certify guarantees"};
  app.require_subcommand(1);
  RunConfig c;
  RawFlags raw;

  auto* gen = app.add_subcommand("gen", "Generate a random or structured graph");
  add_common(gen, c, raw);
  add_generator(gen, c, raw);
  gen->add_option("--n", c.generator.n, "Number of vertices")->required();

  auto* build = app.add_subcommand("build", "Build a near-additive light spanner");
  add_common(build, c, raw);
  add_spanner_params(build, c);
  build->add_option("--input", c.input, "Input graph")->required();

  auto* wmax = app.add_subcommand("build-wmax", "Build the (1+eps, 2(1+eps) W_max) spanner");
  add_common(wmax, c, raw);
  add_spanner_params(wmax, c);
  wmax->add_option("--input", c.input, "Input graph")->required();

  auto* verify = app.add_subcommand("verify", "Certify stretch and lightness of a built spanner");
  add_common(verify, c, raw);
  verify->add_option("--input", c.input, "Input graph")->required();
  verify->add_option("--spanner", c.spanner, "Spanner JSON written by build")->required();
  verify->add_option("--mode", raw.mode, "all_pairs or sampled")->capture_default_str();
  verify->add_option("--sample-size", c.sample_size, "Number of sources in sampled mode");
  verify->add_option("--format", raw.format, "Report format: json or csv")->capture_default_str();
  verify->add_flag("--lemmas", c.lemmas, "Rebuild with internals and run the lemma checks");
  verify->add_flag("--unsafe-eps", c.unsafe_eps, "Accept spanners built with eps >= 0.1");

  auto* inspect = app.add_subcommand("inspect", "Dump the net hierarchy of a graph as JSON");
  add_common(inspect, c, raw);
  inspect->add_option("--input", c.input, "Input graph")->required();
  inspect->add_option("--eps", c.eps, "Stretch parameter, in (0, 0.1)")->capture_default_str();
  inspect->add_flag("--unsafe-eps", c.unsafe_eps, "Accept eps >= 0.1");

  auto* sweep = app.add_subcommand("sweep", "Build and verify over a parameter grid, one CSV row per cell");
  add_common(sweep, c, raw);
  add_generator(sweep, c, raw);
  sweep->add_option("--n", c.sweep_n, "Vertex counts")->required()->delimiter(',');
  sweep->add_option("--k", c.sweep_k, "Level counts")->required()->delimiter(',');
  sweep->add_option("--eps", c.sweep_eps, "Stretch parameters")->required()->delimiter(',');
  sweep->add_option("--seeds", c.sweep_seeds, "Seeds per cell, starting at --seed")->capture_default_str();
  sweep->add_option("--mode", raw.mode, "all_pairs or sampled")->capture_default_str();
  sweep->add_option("--sample-size", c.sample_size, "Number of sources in sampled mode");
  sweep->add_flag("--unsafe-eps", c.unsafe_eps, "Accept eps >= 0.1");

  CLI11_PARSE(app, argc, argv);

  try {
    c.graph_format = lightspan::parse_graph_format(raw.graph_format);
    c.format = lightspan::cli::parse_report_format(raw.format);
    c.mode = lightspan::parse_verify_mode(raw.mode);
    c.family = lightspan::parse_family(raw.family);
  } catch (const std::exception& ex) {
    std::cerr << "error in stage config: " << ex.what() << '\n';
    return 2;
  }
  if (gen->parsed()) c.command = Command::gen;
  if (build->parsed()) c.command = Command::build;
  if (wmax->parsed()) c.command = Command::build_wmax;
  if (verify->parsed()) c.command = Command::verify;
  if (inspect->parsed()) c.command = Command::inspect;
  if (sweep->parsed()) {
    c.command = Command::sweep;
    c.eps = c.sweep_eps.empty() ? c.eps : c.sweep_eps.front();
  }
  return lightspan::cli::run(c, std::cout, std::cerr);
}
