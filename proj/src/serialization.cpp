#include "lightspan/serialization.hpp"

#include <algorithm>
#include <sstream>

#include "lightspan/graph_io.hpp"

namespace lightspan {

using nlohmann::json;

json to_json(const NetHierarchy& h) {
  json levels = json::array();
  for (int i = -1; i <= h.top_level(); ++i) {
    levels.push_back({{"level", i}, {"delta", h.level(i).delta}, {"members", h.level(i).members}});
  }
  json rep = json::array();
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    json row = json::array();
    for (int i = 0; i <= h.top_level(); ++i) row.push_back(h.rep(static_cast<VertexId>(v), i));
    rep.push_back(std::move(row));
  }
  return {{"schema", kHierarchySchema},
          {"eps", h.eps()},
          {"top_level", h.top_level()},
          {"step", h.step()},
          {"mst_weight", h.mst_weight()},
          {"levels", std::move(levels)},
          {"rep", std::move(rep)},
          {"h0_edges", h.h0_edges()}};
}

json to_json(const Spanner& sp, const WeightedGraph& host) {
  sp.check_host(host);
  json edges = json::array();
  for (std::size_t i = 0; i < sp.edges.size(); ++i) {
    const Edge& e = host.edge(sp.edges[i]);
    edges.push_back({e.u, e.v, e.w, to_string(sp.tags[i])});
  }
  json phases = json::object();
  const auto summary = sp.summary(host);
  for (Phase p : kAllPhases) {
    const auto& s = summary[static_cast<std::size_t>(p)];
    phases[std::string(to_string(p))] = {{"edges", s.edges}, {"weight", s.weight}};
  }
  return {{"schema", kSpannerSchema},
          {"kind", sp.kind == SpannerKind::wmax ? "wmax" : "near_additive"},
          {"params",
           {{"eps", sp.params.eps}, {"k", sp.params.k}, {"seed", sp.params.seed}, {"unsafe_eps", sp.params.unsafe_eps}}},
          {"effective_seed", sp.effective_seed},
          {"scale", sp.scale},
          {"n", sp.host_vertices},
          {"host_edges", sp.host_edges},
          {"size", sp.edges.size()},
          {"weight", sp.weight(host)},
          {"phases", std::move(phases)},
          {"edges", std::move(edges)}};
}

Spanner spanner_from_json(const json& j, const WeightedGraph& host) {
  try {
    if (j.at("schema").get<std::string>() != kSpannerSchema) throw StructuralError("unsupported spanner schema");
    Spanner sp;
    sp.kind = j.at("kind").get<std::string>() == "wmax" ? SpannerKind::wmax : SpannerKind::near_additive;
    const json& p = j.at("params");
    sp.params = SpannerParams{p.at("eps").get<double>(), p.at("k").get<int>(), p.at("seed").get<std::uint64_t>(),
                              p.at("unsafe_eps").get<bool>()};
    sp.effective_seed = j.at("effective_seed").get<std::uint64_t>();
    sp.scale = j.at("scale").get<double>();
    sp.host_vertices = j.at("n").get<std::size_t>();
    sp.host_edges = j.at("host_edges").get<std::size_t>();
    if (sp.host_vertices != host.num_vertices() || sp.host_edges != host.num_edges()) {
      throw StructuralError("spanner does not belong to this graph (vertex or edge count differs)");
    }
    std::vector<std::pair<EdgeId, Phase>> tagged;
    for (const json& e : j.at("edges")) {
      const auto u = e.at(0).get<VertexId>();
      const auto v = e.at(1).get<VertexId>();
      const auto id = host.find_edge(u, v);
      if (!id || host.edge(*id).w != e.at(2).get<double>()) {
        throw StructuralError("spanner edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") is not an edge of the graph");
      }
      tagged.emplace_back(*id, parse_phase(e.at(3).get<std::string>()));
    }
    std::sort(tagged.begin(), tagged.end());
    for (const auto& [id, phase] : tagged) {
      sp.edges.push_back(id);
      sp.tags.push_back(phase);
    }
    return sp;
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed spanner JSON: ") + ex.what());
  }
}

json to_json(const StretchReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"x", v.x}, {"y", v.y}, {"d_G", v.d_g}, {"d_H", v.d_h}, {"W", v.w}});
  }
  return {{"schema", kStretchSchema},
          {"mode", to_string(r.mode)},
          {"sources_checked", r.sources_checked},
          {"pairs_checked", r.pairs_checked},
          {"multiplicative", r.multiplicative},
          {"worst_mult_stretch", r.worst_mult_stretch},
          {"worst_additive_slack", r.worst_additive_slack},
          {"bound_used", r.bound_used},
          {"additive_scale", r.per_pair_bottleneck ? "W(x,y)" : "W_max"},
          {"violation_count", r.violation_count},
          {"lower_bound_failures", r.lower_bound_failures},
          {"violations", std::move(violations)},
          {"passed", r.passed()}};
}

json to_json(const LightnessReport& r) {
  json phases = json::object();
  for (Phase p : kAllPhases) {
    const auto& s = r.per_phase[static_cast<std::size_t>(p)];
    phases[std::string(to_string(p))] = {{"edges", s.edges}, {"weight", s.weight}};
  }
  return {{"schema", kLightnessSchema},
          {"spanner_weight", r.spanner_weight},
          {"mst_weight", r.mst_weight},
          {"lightness", r.lightness},
          {"size", r.size},
          {"per_phase", std::move(phases)}};
}

json to_json(const LemmaSuiteReport& r) {
  json checks = json::array();
  for (const LemmaCheck& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"instances", c.instances},
                      {"failures", c.failures},
                      {"witness", c.witness},
                      {"passed", c.passed()}});
  }
  return {{"schema", kLemmaSchema}, {"checks", std::move(checks)}, {"passed", r.passed()}};
}

std::string sweep_csv_preamble() {
  return "# " + std::string(kSweepCsvVersion) + "\n" + std::string(kSweepCsvHeader) + "\n";
}

std::string to_csv_row(const SweepRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.k << ',' << format_double(row.eps) << ',' << row.seed << ',' << row.size << ','
     << format_double(row.lightness) << ',' << format_double(row.worst_mult) << ',' << format_double(row.worst_slack)
     << ',' << format_double(row.bound) << ',' << format_double(row.runtime_ms) << '\n';
  return os.str();
}

}  // namespace lightspan
