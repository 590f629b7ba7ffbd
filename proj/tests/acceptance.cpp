// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lightspan/generators.hpp"
#include "lightspan/net_hierarchy.hpp"
#include "lightspan/shortest_paths.hpp"
#include "lightspan/spanner.hpp"
#include "lightspan/trees.hpp"
#include "lightspan/verification.hpp"
#include "oracles.hpp"

using namespace lightspan;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

WeightedGraph geometric(std::size_t n, std::uint64_t seed) {
  return generate_graph(GraphFamily::geometric_unit_square, {.n = n}, seed);
}

WeightedGraph erdos_renyi(std::size_t n, std::uint64_t seed, double min_w = 1.0, double max_w = 10.0) {
  const double p = std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n));
  return generate_graph(GraphFamily::erdos_renyi, {.n = n, .p = p, .min_weight = min_w, .max_weight = max_w}, seed);
}

// Net validity: covering, packing and |N|·Δ ≤ 2·w(MST) on every level.
void net_validity(Outcome& o) {
  const auto start = Clock::now();
  std::size_t levels = 0, failures = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t n = 50 + (950 * s) / 49;
    const auto g = normalize(s % 2 ? erdos_renyi(n, s) : geometric(n, s)).graph;
    const auto h = build_net_hierarchy(g, 0.05);
    for (int i = 0; i <= h.top_level(); ++i) {
      ++levels;
      if (!verify_net(g, h.level(i)).passed()) {
        if (failures++ == 0) o.detail << "first failure: graph " << s << " level " << i << "; ";
      }
    }
  }
  const double t = seconds_since(start);
  o.passed = failures == 0 && t < 120.0;
  o.detail << "50 graphs, " << levels << " levels, " << failures << " failures, " << t << " s (limit 120 s)";
}

// d_H0(v, rep(v, i)) ≤ (1+2ε)·2^i for every v and i.
void representative_bound(Outcome& o) {
  std::size_t checked = 0, failures = 0;
  double worst = 0.0;
  const std::vector<std::function<WeightedGraph()>> graphs = {
      [] { return geometric(500, 11); }, [] { return erdos_renyi(400, 12); },
      [] { return generate_graph(GraphFamily::grid, {.n = 484}, 0); },
      [] { return generate_graph(GraphFamily::path, {.n = 500}, 0); }};
  for (const auto& make : graphs) {
    const auto g = normalize(make()).graph;
    for (double eps : {0.02, 0.05, 0.09}) {
      const auto h = build_net_hierarchy(g, eps);
      const auto h0 = g.subgraph(h.h0_edges());
      for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        const auto d = dijkstra(h0, v);
        for (int i = 0; i <= h.top_level(); ++i) {
          ++checked;
          const double bound = (1 + 2 * eps) * std::ldexp(1.0, i);
          const VertexId r = h.rep(v, i);
          worst = std::max(worst, d[r] / std::ldexp(1.0, i));
          if (!h.in_net(r, i) || !within(d[r], bound)) ++failures;
        }
      }
    }
  }
  o.passed = failures == 0;
  o.detail << checked << " (v, i) pairs on 4 graphs x 3 eps, " << failures
           << " violations, worst d_H0/2^i = " << worst << " (bound 1.18 at eps 0.09)";
}

// SLT root stretch and weight, plus the forest form used for approximate pivots.
void slt_contract(Outcome& o) {
  std::size_t trees = 0, forests = 0, failures = 0;
  double worst_light = 0.0;
  const double eps_values[] = {0.02, 0.05, 0.09, 0.25, 1.0};
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t n = 60 + 8 * s;
    const auto g = s % 3 == 0 ? erdos_renyi(n, s, 1.0, 100.0) : geometric(n, s);
    const double eps = eps_values[s % 5];
    Rng rng(s);
    const auto root = static_cast<VertexId>(rng.below(n));
    const auto t = slt(g, root, eps);
    const auto check = verify_slt(g, t, root, eps);
    ++trees;
    if (!check.passed()) ++failures;
    worst_light = std::max(worst_light, check.weight / (check.weight_bound / slt_weight_factor(eps)));
    std::vector<VertexId> roots;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
      if (rng.bernoulli(0.05)) roots.push_back(v);
    if (roots.empty()) roots.push_back(root);
    ++forests;
    if (!verify_slt_forest(g, slt_forest(g, roots, eps), roots, eps).passed()) ++failures;
  }
  o.passed = failures == 0;
  o.detail << trees << " SLTs + " << forests << " SLT forests, " << failures
           << " violations, worst w(T)/w(MST) = " << worst_light;
}

// Bunch lemma: d_H(u,v) ≤ (1+ε)·d(u,v) for v in the (1-ε)/2-bunch of u.
void bunch_lemma(Outcome& o) {
  std::size_t pairs = 0, rep_pairs = 0, failures = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto geo = construct_spanner(geometric(300, s), 0.05, 1 + static_cast<int>(s % 3), s);
    const auto path = construct_spanner(generate_graph(GraphFamily::path, {.n = 300}, 0), 0.09, 1, 37 * s);
    for (const auto* c : {&geo, &path}) {
      const auto report = verify_lemma_suite(*c);
      const auto& check = report.at("distance_in_bunch");
      pairs += check.instances;
      failures += check.failures;
      for (const auto& rc : c->phase_two.connections) rep_pairs += rc.tag == Phase::p2_rep;
    }
  }
  o.passed = failures == 0;
  o.detail << "20 instances (n = 300, 10 seeds), " << pairs << " bunch pairs (" << rep_pairs
           << " via representatives), " << failures << " violations";
}

// All-pairs near-additive stretch.
void full_stretch(Outcome& o) {
  const auto start = Clock::now();
  std::size_t pairs = 0, violations = 0;
  double worst_slack = 0.0, worst_mult = 1.0, worst_fraction = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const int k = 1 + static_cast<int>(s % 3);
    const double eps = s % 2 ? 0.02 : 0.05;
    const std::size_t n = 150 + 15 * (s % 11);
    const auto g = s % 4 == 3 ? erdos_renyi(n, s, 1.0, 50.0) : geometric(n, s);
    const auto sp = build_spanner(g, eps, k, s);
    const auto r = verify_stretch(g, sp);
    pairs += r.pairs_checked;
    violations += r.violation_count + r.lower_bound_failures;
    worst_mult = std::max(worst_mult, r.worst_mult_stretch);
    worst_slack = std::max(worst_slack, r.worst_additive_slack);
    worst_fraction = std::max(worst_fraction, r.worst_additive_slack / r.bound_used);
  }
  const double t = seconds_since(start);
  o.passed = violations == 0 && t < 600.0;
  o.detail << "20 instances, " << pairs << " pairs, " << violations << " violations, worst d_H/d_G = " << worst_mult
           << ", worst slack/W = " << worst_slack << " (max fraction of its bound " << worst_fraction << "), " << t
           << " s (limit 600 s)";
}

struct SweepRun {
  std::size_t n;
  double lightness, h0_ratio, size;
};

std::vector<SweepRun> sweep_runs;

void run_sweep() {
  if (!sweep_runs.empty()) return;
  for (std::size_t n : {256u, 1024u, 4096u}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto g = geometric(n, s);
      const auto c = construct_spanner(g, 0.05, 2, s);
      const auto light = verify_lightness(g, c.spanner);
      const double h0 = h0_weight(c.normalized.graph, c.hierarchy) / mst(c.normalized.graph).total_weight;
      sweep_runs.push_back({n, light.lightness, h0, static_cast<double>(light.size)});
    }
  }
}

// Lightness against 64·(n^{1/k}/ε)·(log2 n)^2 and H0 against (8/ε)(⌈log2 n⌉+2).
void lightness_trend(Outcome& o) {
  run_sweep();
  const double eps = 0.05;
  const int k = 2;
  for (std::size_t n : {256u, 1024u, 4096u}) {
    const double ln2 = std::log2(static_cast<double>(n));
    const double light_bound = 64.0 * std::pow(static_cast<double>(n), 1.0 / k) / eps * ln2 * ln2;
    const double h0_bound = 8.0 / eps * (std::ceil(ln2) + 2);
    double max_light = 0, max_h0 = 0;
    for (const auto& r : sweep_runs) {
      if (r.n != n) continue;
      max_light = std::max(max_light, r.lightness);
      max_h0 = std::max(max_h0, r.h0_ratio);
      if (r.lightness > light_bound || r.h0_ratio > h0_bound) o.passed = false;
    }
    o.detail << "n=" << n << ": max lightness " << max_light << " (bound " << light_bound << "), max H0 "
             << max_h0 << " (bound " << h0_bound << "); ";
  }
}

// |E(H)| ≤ 16·k·n^{1+3/k}; the median is reported against k·n^{1+3/k}.
void size_trend(Outcome& o) {
  run_sweep();
  const int k = 2;
  double previous = 0;
  for (std::size_t n : {256u, 1024u, 4096u}) {
    const double scale = k * std::pow(static_cast<double>(n), 1.0 + 3.0 / k);
    std::vector<double> sizes;
    for (const auto& r : sweep_runs)
      if (r.n == n) sizes.push_back(r.size);
    std::sort(sizes.begin(), sizes.end());
    const double median = sizes[sizes.size() / 2];
    if (sizes.back() > 16 * scale || median > scale || median < previous) o.passed = false;
    previous = median;
    o.detail << "n=" << n << ": max |E| " << sizes.back() << ", median " << median << " = " << median / scale
             << " k n^(1+3/k); ";
  }
}

// max_u |B_1(u)| ≤ 2·n^{1/k}·ln n in at least 95 of 100 runs.
void bunch_concentration(Outcome& o) {
  const std::size_t n = 1024;
  for (int k : {2, 3}) {
    const double bound = 2.0 * std::pow(static_cast<double>(n), 1.0 / k) * std::log(static_cast<double>(n));
    int good = 0;
    std::size_t largest = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto g = normalize(geometric(n, s)).graph;
      const auto ls = sample_levels(g, k, s);
      std::size_t worst = 0;
      for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) worst = std::max(worst, bunch_of(ls, g, u, 1.0).members.size());
      largest = std::max(largest, worst);
      good += static_cast<double>(worst) <= bound;
    }
    if (good < 95) o.passed = false;
    o.detail << "k=" << k << ": " << good << "/100 runs within " << bound << " (largest bunch " << largest << "); ";
  }
}

// W_max spanner on instances with normalized W_max ≥ √n.
void wmax_spanner(Outcome& o) {
  std::size_t pairs = 0, violations = 0;
  double worst_size = 0, worst_light = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::size_t n = 100 + 20 * s;
    WeightedGraph g;
    if (s % 2 == 0) {
      // Random-weight core plus a chord as heavy as the core's MST; the chord never enters the MST.
      const auto core = erdos_renyi(n, s, 1.0, 100.0);
      std::vector<Edge> edges(core.edges().begin(), core.edges().end());
      auto far = static_cast<VertexId>(n - 1);
      while (core.find_edge(0, far)) --far;
      edges.push_back({0, far, mst(core).total_weight});
      g = WeightedGraph(n, std::move(edges));
    } else {
      // Geometric core plus one pendant vertex hung on an edge as heavy as the core's MST.
      const auto core = geometric(n - 1, s);
      std::vector<Edge> edges(core.edges().begin(), core.edges().end());
      edges.push_back({0, static_cast<VertexId>(n - 1), mst(core).total_weight});
      g = WeightedGraph(n, std::move(edges));
    }
    const double eps = s % 3 == 0 ? 0.02 : 0.05;
    const auto sp = build_wmax_spanner(g, eps);
    const auto r = verify_stretch(g, sp);
    const auto light = verify_lightness(g, sp);
    pairs += r.pairs_checked;
    violations += r.violation_count + r.lower_bound_failures;
    const double size_ratio = static_cast<double>(light.size) / (4 * std::pow(static_cast<double>(n), 1.5));
    const double light_ratio = light.lightness / (2 * std::sqrt(static_cast<double>(n)) * (1 + 2 / eps));
    worst_size = std::max(worst_size, size_ratio);
    worst_light = std::max(worst_light, light_ratio);
    if (size_ratio > 1 || light_ratio > 1) ++violations;
  }
  o.passed = violations == 0;
  o.detail << "10 instances, " << pairs << " pairs, " << violations << " violations, max |E|/(4 n^1.5) = " << worst_size
           << ", max lightness/(2 sqrt(n)(1+2/eps)) = " << worst_light;
}

// Reference algorithms agree exactly with the library.
void oracle_equivalence(Outcome& o) {
  std::size_t sources = 0, bottleneck_sources = 0, trees = 0, mismatches = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::size_t n = 20 + 9 * s;
    const auto g = s % 2 ? geometric(n, s) : oracle::tie_heavy_graph(n, 0.06, 5, s);
    for (VertexId v = 0; v < static_cast<VertexId>(n); v += 3, ++sources)
      if (dijkstra(g, v).dist != oracle::bellman_ford(g, v)) ++mismatches;
  }
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::size_t n = 4 + s % 9;
    const auto g = oracle::tie_heavy_graph(n, 0.4, 3, s);
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v, ++bottleneck_sources) {
      const auto t = dijkstra(g, v);
      const auto e = oracle::enumerate_simple_paths(g, v);
      if (t.dist != e.length || t.bottleneck != e.bottleneck) ++mismatches;
    }
  }
  for (std::uint64_t s = 0; s < 60; ++s, ++trees) {
    const auto g = oracle::tie_heavy_graph(3 + s % 6, 0.5, s % 2 ? 2 : 9, s);
    if (mst(g).total_weight != oracle::min_spanning_tree_weight(g)) ++mismatches;
  }
  o.passed = mismatches == 0;
  o.detail << sources << " Bellman-Ford sources (n <= 200), " << bottleneck_sources
           << " path-enumeration sources (n <= 12), " << trees << " spanning-tree enumerations (n <= 8), "
           << mismatches << " mismatches";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {1, "net validity", net_validity},
      {2, "representative bound", representative_bound},
      {3, "SLT contract", slt_contract},
      {4, "bunch lemma", bunch_lemma},
      {5, "full stretch", full_stretch},
      {6, "lightness trend", lightness_trend},
      {7, "size trend", size_trend},
      {8, "bunch-size concentration", bunch_concentration},
      {9, "W_max spanner", wmax_spanner},
      {10, "oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& ex) {
      o.passed = false;
      o.detail << "exception: " << ex.what();
    }
    failed += !o.passed;
    std::printf("criterion %2d %s: %s | %s [%.1f s]\n", c.id, o.passed ? "PASS" : "FAIL", c.name,
                o.detail.str().c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
