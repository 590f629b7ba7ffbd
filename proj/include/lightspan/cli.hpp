// Command-line harness: generate, build, verify, inspect and sweep.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lightspan/generators.hpp"
#include "lightspan/graph_io.hpp"
#include "lightspan/verification.hpp"

namespace lightspan::cli {

enum class Command { gen, build, build_wmax, verify, inspect, sweep };

std::string to_string(Command command);

enum class ReportFormat { json, csv, edge_list };

ReportFormat parse_report_format(std::string_view name);

struct RunConfig {
  Command command = Command::build;
  std::filesystem::path input;
  std::filesystem::path spanner;  // verify: spanner JSON written by build
  std::filesystem::path output_dir = ".";
  GraphFormat graph_format = GraphFormat::edge_list;
  ReportFormat format = ReportFormat::json;
  double eps = 0.05;
  int k = 2;
  std::uint64_t seed = 0;
  VerifyMode mode = VerifyMode::all_pairs;
  std::size_t sample_size = 0;
  bool unsafe_eps = false;
  bool lemmas = false;  // verify: also rebuild and run the lemma suite

  GraphFamily family = GraphFamily::geometric_unit_square;
  GeneratorParams generator;

  std::vector<std::size_t> sweep_n;
  std::vector<int> sweep_k;
  std::vector<double> sweep_eps;
  std::size_t sweep_seeds = 1;
};

/// Checks the invariants on a config: eps in (0, 1/10) unless unsafe, k >= 1,
/// required paths present. Throws ParameterError.
void validate(const RunConfig& config);

/// Executes one command. Returns 0 on success, 1 when a requested
/// verification failed, 2 on any error (reported to `err` with the failing
/// stage and a config echo).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lightspan::cli
