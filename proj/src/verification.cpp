#include "lightspan/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "lightspan/random.hpp"
#include "lightspan/shortest_paths.hpp"

namespace lightspan {
namespace {

std::vector<VertexId> pick_sources(std::size_t n, VerifyMode mode, std::size_t sample_size, std::uint64_t seed) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  if (mode == VerifyMode::all_pairs || sample_size >= n) return all;
  Rng rng(derive_seed(seed, 0x5a3d));
  for (std::size_t i = 0; i < sample_size; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(all[i], all[j]);
  }
  all.resize(sample_size);
  std::sort(all.begin(), all.end());
  return all;
}

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [key, value] : fields) {
    os << (first ? "" : " ") << key << '=' << value;
    first = false;
  }
  return os.str();
}

void fail(LemmaCheck& check, const std::string& witness) {
  if (check.failures++ == 0) check.witness = witness;
}

}  // namespace

std::string_view to_string(VerifyMode mode) { return mode == VerifyMode::all_pairs ? "all_pairs" : "sampled"; }

VerifyMode parse_verify_mode(std::string_view name) {
  if (name == "all_pairs") return VerifyMode::all_pairs;
  if (name == "sampled") return VerifyMode::sampled;
  throw ParameterError("unknown verification mode '" + std::string(name) + "'");
}

StretchBound default_stretch_bound(const Spanner& sp) {
  const double eps = sp.params.eps;
  if (sp.kind == SpannerKind::wmax) return StretchBound{1.0 + eps, 2.0 * (1.0 + eps), false};
  return StretchBound{1.0 + 2.0 * eps, near_additive_beta(sp.params.k, eps), true};
}

StretchReport verify_stretch(const WeightedGraph& g, const Spanner& sp, VerifyMode mode, std::size_t sample_size,
                             std::uint64_t seed) {
  return verify_stretch(g, sp, default_stretch_bound(sp), mode, sample_size, seed);
}

StretchReport verify_stretch(const WeightedGraph& g, const Spanner& sp, const StretchBound& bound, VerifyMode mode,
                             std::size_t sample_size, std::uint64_t seed) {
  return verify_stretch(g, sp.subgraph(g), bound, mode, sample_size, seed);
}

StretchReport verify_stretch(const WeightedGraph& g, const WeightedGraph& h, const StretchBound& bound,
                             VerifyMode mode, std::size_t sample_size, std::uint64_t seed) {
  if (g.num_vertices() != h.num_vertices()) throw StructuralError("spanner and graph have different vertex sets");
  if (mode == VerifyMode::sampled && sample_size == 0) throw ParameterError("sampled mode needs a sample size");
  StretchReport r;
  r.mode = mode;
  r.multiplicative = bound.multiplicative;
  r.bound_used = bound.additive;
  r.per_pair_bottleneck = bound.per_pair_bottleneck;
  const double w_max = g.max_weight();
  const auto sources = pick_sources(g.num_vertices(), mode, sample_size, seed);
  r.sources_checked = sources.size();

  for (VertexId x : sources) {
    const DistanceTable dg = dijkstra(g, x);
    const DistanceTable dh = dijkstra(h, x);
    for (std::size_t yi = 0; yi < g.num_vertices(); ++yi) {
      const auto y = static_cast<VertexId>(yi);
      if (y == x || (mode == VerifyMode::all_pairs && y < x)) continue;
      ++r.pairs_checked;
      const double d_g = dg.dist[yi];
      const double d_h = dh.dist[yi];
      const double w = bound.per_pair_bottleneck ? dg.bottleneck[yi] : w_max;
      const StretchViolation witness{x, y, d_g, d_h, w};
      if (d_h < d_g) {
        ++r.lower_bound_failures;
        if (r.violations.size() < kMaxReportedViolations) r.violations.push_back(witness);
        continue;
      }
      r.worst_mult_stretch = std::max(r.worst_mult_stretch, d_h / d_g);
      const double excess = d_h - bound.multiplicative * d_g;
      if (excess > 0.0) r.worst_additive_slack = std::max(r.worst_additive_slack, excess / w);
      if (!within(d_h, bound.multiplicative * d_g + bound.additive * w)) {
        ++r.violation_count;
        if (r.violations.size() < kMaxReportedViolations) r.violations.push_back(witness);
      }
    }
  }
  return r;
}

LightnessReport verify_lightness(const WeightedGraph& g, const Spanner& sp) {
  LightnessReport r = verify_lightness(g, sp.subgraph(g));
  r.per_phase = sp.summary(g);
  return r;
}

LightnessReport verify_lightness(const WeightedGraph& g, const WeightedGraph& h) {
  LightnessReport r;
  r.spanner_weight = h.total_weight();
  r.mst_weight = mst(g).total_weight;
  r.lightness = r.spanner_weight / r.mst_weight;
  r.size = h.num_edges();
  return r;
}

NetCheck verify_net(const WeightedGraph& g, const DeltaNet& net) {
  NetCheck check;
  check.mst_weight = mst(g).total_weight;
  if (net.members.empty()) {
    check.covering = g.num_vertices() == 0;
    if (!check.covering) check.uncovered = std::pair<VertexId, double>{0, kInfinity};
    return check;
  }
  const DistanceTable cover = multi_source_dijkstra(g, net.members);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!(cover.dist[v] <= net.delta)) {
      check.covering = false;
      check.uncovered = std::pair<VertexId, double>{static_cast<VertexId>(v), cover.dist[v]};
      break;
    }
  }
  std::vector<char> member(g.num_vertices(), 0);
  for (VertexId v : net.members) member[static_cast<std::size_t>(v)] = 1;
  for (VertexId u : net.members) {
    const DistanceTable ball = dijkstra_within(g, u, net.delta);
    for (VertexId v : net.members) {
      if (v != u && ball.reached(v)) {
        check.packing = false;
        check.close_members = std::tuple<VertexId, VertexId, double>{u, v, ball[v]};
        break;
      }
    }
    if (!check.packing) break;
  }
  if (net.members.size() >= 2) {
    check.mst_bound = within(static_cast<double>(net.members.size()) * net.delta, 2.0 * check.mst_weight);
  }
  return check;
}

SltCheck verify_slt(const WeightedGraph& g, const SpanningTree& t, VertexId root, double eps) {
  SltCheck check;
  const WeightedGraph tree = g.subgraph(t.edges);
  check.spanning = t.edges.size() + 1 == g.num_vertices() && tree.is_connected();
  check.weight = tree.total_weight();
  check.weight_bound = slt_weight_factor(eps) * mst(g).total_weight;
  check.lightness = within(check.weight, check.weight_bound);
  const DistanceTable dt = dijkstra(tree, root);
  const DistanceTable dg = dijkstra(g, root);
  double worst = 1.0;
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    if (!within(dt.dist[x], (1.0 + eps) * dg.dist[x])) check.root_stretch = false;
    const double ratio = dg.dist[x] > 0.0 ? dt.dist[x] / dg.dist[x] : 1.0;
    if (ratio > worst || !check.worst) {
      worst = std::max(worst, ratio);
      check.worst = std::tuple<VertexId, double, double>{static_cast<VertexId>(x), dt.dist[x], dg.dist[x]};
    }
  }
  return check;
}

SltCheck verify_slt_forest(const WeightedGraph& g, const SltForest& forest, std::span<const VertexId> roots,
                           double eps) {
  SltCheck check;
  const WeightedGraph f = g.subgraph(forest.edges);
  check.weight = f.total_weight();
  check.weight_bound = slt_weight_factor(eps) * mst(g).total_weight;
  check.lightness = within(check.weight, check.weight_bound);
  const DistanceTable df = multi_source_dijkstra(f, roots);
  const DistanceTable dg = multi_source_dijkstra(g, roots);
  std::vector<char> is_root(g.num_vertices(), 0);
  for (VertexId r : roots) is_root[static_cast<std::size_t>(r)] = 1;
  // Acyclic: a forest has exactly n - (#components) edges.
  std::vector<char> seen(g.num_vertices(), 0);
  std::size_t components = 0;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<VertexId> stack{static_cast<VertexId>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Arc& a : f.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = 1;
          stack.push_back(a.to);
        }
      }
    }
  }
  check.spanning = forest.edges.size() + components == g.num_vertices();
  double worst = 1.0;
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    const VertexId p = forest.approx_pivot[u];
    const bool pivot_ok = p != kNoVertex && is_root[static_cast<std::size_t>(p)] && df.root[u] == p &&
                          within(forest.forest_dist[u], df.dist[u]) && within(df.dist[u], forest.forest_dist[u]);
    if (!pivot_ok || !within(df.dist[u], (1.0 + eps) * dg.dist[u])) check.root_stretch = false;
    const double ratio = dg.dist[u] > 0.0 ? df.dist[u] / dg.dist[u] : 1.0;
    if (ratio > worst || !check.worst) {
      worst = std::max(worst, ratio);
      check.worst = std::tuple<VertexId, double, double>{static_cast<VertexId>(u), df.dist[u], dg.dist[u]};
    }
  }
  return check;
}

bool LemmaSuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed(); });
}

const LemmaCheck& LemmaSuiteReport::at(std::string_view name) const {
  for (const LemmaCheck& c : checks) {
    if (c.name == name) return c;
  }
  throw InputError("no lemma check named '" + std::string(name) + "'");
}

LemmaSuiteReport verify_lemma_suite(const SpannerConstruction& c) { return verify_lemma_suite(c, c.spanner); }

LemmaSuiteReport verify_lemma_suite(const SpannerConstruction& c, const Spanner& sp) {
  const WeightedGraph& g = c.normalized.graph;
  const NetHierarchy& h = c.hierarchy;
  const LevelSampling& ls = c.sampling;
  const std::size_t n = g.num_vertices();
  const double eps = h.eps();
  const int k = ls.k();
  const WeightedGraph spanner = sp.subgraph(g);
  const WeightedGraph h0 = g.subgraph(h.h0_edges());

  std::vector<std::vector<double>> dist(n);
  for (std::size_t v = 0; v < n; ++v) dist[v] = dijkstra(g, static_cast<VertexId>(v)).dist;
  auto d = [&](VertexId a, VertexId b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  // Open ball of radius d(centre, A_{i+1}); unbounded at the top level.
  auto in_ball = [&](VertexId centre, int i, VertexId p) { return d(centre, p) < ls.pivot_dist(centre, i + 1); };

  LemmaSuiteReport report;

  LemmaCheck nets{"nets", 0, 0, {}};
  for (int i = 0; i <= h.top_level(); ++i) {
    ++nets.instances;
    const NetCheck nc = verify_net(g, h.level(i));
    const auto& upper = h.level(std::min(i + 1, h.top_level())).members;
    const bool nested = std::all_of(upper.begin(), upper.end(), [&](VertexId v) { return h.in_net(v, i); });
    if (!nc.passed() || !nested) {
      fail(nets, describe({{"level", i}, {"covering", nc.covering}, {"packing", nc.packing},
                           {"mst_bound", nc.mst_bound}, {"nested", nested}}));
    }
  }
  if (h.level(h.top_level()).members.size() != 1) fail(nets, "top level has more than one member");
  report.checks.push_back(std::move(nets));

  LemmaCheck representative{"representative", 0, 0, {}};
  for (std::size_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<VertexId>(vi);
    const DistanceTable in_h0 = dijkstra(h0, v);
    for (int i = 0; i <= h.top_level(); ++i) {
      ++representative.instances;
      const VertexId r = h.rep(v, i);
      const double bound = (1.0 + 2.0 * eps) * std::ldexp(1.0, i);
      if (!h.in_net(r, i) || !within(in_h0[r], bound)) {
        fail(representative, describe({{"v", v}, {"level", i}, {"rep", r}, {"d_H0", in_h0[r]}, {"bound", bound}}));
      }
    }
  }
  report.checks.push_back(std::move(representative));

  LemmaCheck in_bunch{"distance_in_bunch", 0, 0, {}};
  const double half = (1.0 - eps) / 2.0;
  for (std::size_t ui = 0; ui < n; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    const Bunch b = bunch_of(ls, g, u, half);
    const DistanceTable dh = dijkstra(spanner, u);
    for (VertexId v : b.members) {
      if (v == u) continue;
      ++in_bunch.instances;
      if (!within(dh[v], (1.0 + eps) * d(u, v))) {
        fail(in_bunch, describe({{"u", u}, {"v", v}, {"d", d(u, v)}, {"d_H", dh[v]}, {"bound", (1.0 + eps) * d(u, v)}}));
      }
    }
  }
  report.checks.push_back(std::move(in_bunch));

  LemmaCheck rep_length{"rep_path_length", 0, 0, {}};
  for (const RepConnection& rc : c.phase_two.connections) {
    if (rc.scale < 0) continue;
    ++rep_length.instances;
    const double bound = (1.0 + eps / 2.0) * d(rc.u, rc.v);
    if (!within(d(rc.u, rc.target), bound)) {
      fail(rep_length, describe({{"u", rc.u}, {"v", rc.v}, {"x", rc.target}, {"d_ux", d(rc.u, rc.target)}, {"bound", bound}}));
    }
  }
  report.checks.push_back(std::move(rep_length));

  LemmaCheck containment{"half_bunch_in_bunch", 0, 0, {}};
  std::map<std::tuple<int, int, VertexId>, std::vector<VertexId>> groups;
  for (const RepConnection& rc : c.phase_two.connections) {
    if (rc.tag == Phase::p2_rep) groups[{rc.level, rc.scale, rc.target}].push_back(rc.u);
  }
  for (auto& [key, members] : groups) {
    const auto [i, j, x] = key;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ++containment.instances;
    VertexId far = members.front();
    for (VertexId u : members) {
      if (d(u, x) > d(far, x)) far = u;
    }
    for (VertexId u : members) {
      if (!in_ball(far, i, u)) {
        fail(containment, describe({{"level", i}, {"scale", j}, {"x", x}, {"u_far", far}, {"u", u},
                                    {"d", d(far, u)}, {"radius", ls.pivot_dist(far, i + 1)}}));
        break;
      }
    }
  }
  report.checks.push_back(std::move(containment));

  LemmaCheck intersect{"paths_intersect", 0, 0, {}};
  const auto& paths = c.phase_two.paths;
  if (paths.size() != c.phase_two.connections.size()) {
    fail(intersect, "construction did not retain phase-2 paths");
  } else {
    for (int i = 0; i < k; ++i) {
      std::vector<std::vector<std::size_t>> through(n);
      for (std::size_t p = 0; p < paths.size(); ++p) {
        if (c.phase_two.connections[p].level != i) continue;
        for (VertexId z : paths[p]) through[static_cast<std::size_t>(z)].push_back(p);
      }
      // Connections come grouped by source, so every path of a later source
      // sits past the end of the current source's block. Visit each
      // intersecting pair once, from its lower-numbered path.
      const auto& conns = c.phase_two.connections;
      std::vector<std::size_t> seen(paths.size(), paths.size());
      // p.u and p.target against p's own ball, computed once per path.
      std::vector<char> own(paths.size());
      for (std::size_t a = 0; a < paths.size(); ++a) {
        own[a] = conns[a].level == i && in_ball(conns[a].u, i, conns[a].u) && in_ball(conns[a].u, i, conns[a].target);
      }
      std::size_t block_end = 0;
      for (std::size_t a = 0; a < paths.size(); ++a) {
        const RepConnection& p = conns[a];
        if (a >= block_end) {
          block_end = a + 1;
          while (block_end < conns.size() && conns[block_end].u == p.u) ++block_end;
        }
        if (p.level != i) continue;
        for (VertexId z : paths[a]) {
          const auto& list = through[static_cast<std::size_t>(z)];
          for (auto it = std::lower_bound(list.begin(), list.end(), block_end); it != list.end(); ++it) {
            const std::size_t b = *it;
            if (seen[b] == a) continue;
            seen[b] = a;
            const RepConnection& q = conns[b];
            if (p.u == q.u) continue;
            ++intersect.instances;
            const bool in_u = own[a] && in_ball(p.u, i, q.u) && in_ball(p.u, i, q.target);
            const bool in_x = own[b] && in_ball(q.u, i, p.u) && in_ball(q.u, i, p.target);
            if (!in_u && !in_x) {
              fail(intersect, describe({{"level", i}, {"u", p.u}, {"v", p.target}, {"x", q.u}, {"y", q.target}}));
            }
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(intersect));

  LemmaCheck pivots{"approximate_pivots", 0, 0, {}};
  for (int i = 1; i <= k && static_cast<std::size_t>(i) <= c.forests.size(); ++i) {
    ++pivots.instances;
    const SltCheck sc = verify_slt_forest(g, c.forests[static_cast<std::size_t>(i) - 1], ls.level(i), eps);
    if (!sc.passed()) {
      const auto [x, df, dg] = sc.worst.value_or(std::tuple<VertexId, double, double>{kNoVertex, 0.0, 0.0});
      fail(pivots, describe({{"level", i}, {"vertex", x}, {"d_forest", df}, {"d", dg}, {"spanning", sc.spanning},
                             {"light", sc.lightness}}));
    }
  }
  report.checks.push_back(std::move(pivots));
  return report;
}

}  // namespace lightspan
