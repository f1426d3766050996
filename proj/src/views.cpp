#include <algorithm>

#include "cdt/automorphism.hpp"
#include "cdt/cycles.hpp"
#include "cdt/io.hpp"
#include "cdt/ooa.hpp"
#include "cdt/report.hpp"
#include "cdt/separator.hpp"
#include "cdt/surface.hpp"

namespace cdt {

using nlohmann::json;

namespace {

struct Oriented {
  PermGroup aut;
  int k = 0;
  CycleSet cycles;
  ParityConstraintGraph constraints;
  SolveResult result;
};

Oriented orient(const ReportInput& in) {
  const Graph& g = in.graph;
  if (g.order() == 0 || !is_connected(g)) throw InputError("graph is empty or disconnected");
  Oriented o;
  try {
    o.cycles = enumerate_girth_cycles(g);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  o.aut = automorphism_group(g);
  o.k = arc_transitivity(g, o.aut);
  if (o.k < 2 || o.k - 1 >= o.cycles.girth())
    throw InputError("arc-transitivity " + std::to_string(o.k) + " leaves no (k-1)-paths to orient");
  try {
    o.constraints = build_constraints(g, o.cycles, o.k);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
  o.result = solve(o.constraints);
  return o;
}

std::string text(const std::vector<Vertex>& vs, const LabelTable& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ' ';
    out += labels.label(vs[i]);
  }
  return out + ")";
}

SeparatorDigraph separator_of(const ReportInput& in, const Oriented& o) {
  if (!o.result.solved()) throw InputError(in.name + " has no consistent cycle orientation; S(G) is undefined");
  return build_separator(in.graph, o.cycles, o.k, o.result.assignment());
}

}  // namespace

json catalog_view() {
  json out = json::array();
  for (CdtName name : kAllCdt) {
    const CdtParameters p = cdt_parameters(name);
    out.push_back({{"token", std::string(cdt_token(name))},
                   {"name", std::string(cdt_display_name(name))},
                   {"n", p.n},
                   {"d", p.d},
                   {"g", p.g},
                   {"k", p.k},
                   {"eta", p.eta},
                   {"a", p.a},
                   {"b", p.b},
                   {"h", p.h},
                   {"kappa", p.kappa}});
  }
  return out;
}

json analyze_view(const ReportInput& in) {
  const Graph& g = in.graph;
  if (g.order() == 0) throw InputError("empty graph");
  const DistanceTable dt = distances(g);
  json out = {{"graph", in.name},
              {"order", g.order()},
              {"edges", g.edge_count()},
              {"connected", is_connected(g)},
              {"cubic", g.is_regular(3)},
              {"bipartite", is_bipartite(g)},
              {"planar", is_planar(g)}};
  if (!is_connected(g)) return out;
  out["diameter"] = dt.diameter;
  const PermGroup aut = automorphism_group(g);
  out["automorphisms"] = aut.order();
  out["arc_transitivity"] = arc_transitivity(g, aut);
  out["distance_transitive"] = is_distance_transitive(g, aut);
  int gth = 0;
  try {
    gth = girth(g);
  } catch (const GraphError&) {
    out["girth"] = nullptr;
    return out;
  }
  out["girth"] = gth;
  const CycleSet cs = enumerate_girth_cycles(g);
  out["girth_cycles"] = cs.size();
  const int k = out["arc_transitivity"].get<int>();
  if (k >= 2 && k - 1 < gth) {
    json levels = json::array();
    for (const FasteningLevel& l : fastening_profile(g, cs, k).levels) {
      json hist = json::object();
      for (auto [c, n] : l.histogram) hist[std::to_string(c)] = n;
      levels.push_back({{"level", l.level}, {"path_length", l.path_length}, {"expected", l.expected},
                        {"histogram", hist}, {"uniform", l.uniform}});
    }
    out["fastening"] = levels;
  }
  if (in.cdt) {
    const CdtParameters p = cdt_parameters(*in.cdt);
    out["table"] = {{"n", p.n}, {"d", p.d}, {"g", p.g}, {"k", p.k}, {"eta", p.eta},
                    {"a", p.a}, {"b", p.b}, {"h", p.h}, {"kappa", p.kappa}};
  }
  return out;
}

json orient_view(const ReportInput& in) {
  const Oriented o = orient(in);
  json out = {{"graph", in.name},
              {"k", o.k},
              {"girth", o.cycles.girth()},
              {"girth_cycles", o.cycles.size()},
              {"constraints", o.constraints.constraints.size()},
              {"components", o.result.components},
              {"solved", o.result.solved()}};
  if (o.result.solved()) {
    json cycles = json::array();
    for (const auto& c : oriented_cycles(o.cycles, o.result.assignment())) cycles.push_back(text(c, in.labels));
    out["oriented_cycles"] = cycles;
    out["verified"] = verify_ooa(in.graph, o.cycles, o.k, o.result.assignment());
  } else {
    const OddWitness& w = o.result.witness();
    json steps = json::array();
    for (std::size_t i = 0; i < w.constraints.size(); ++i) {
      const auto& c = o.constraints.constraints[static_cast<std::size_t>(w.constraints[i])];
      steps.push_back({{"cycle", text(o.cycles.cycle(w.cycles[i]), in.labels)},
                       {"path", text(c.path.vertices, in.labels)},
                       {"parity", c.parity == Parity::equal ? "equal" : "unequal"}});
    }
    out["witness"] = steps;
    out["witness_valid"] = validate_witness(o.constraints, w);
  }
  return out;
}

json separator_view(const ReportInput& in) {
  const Oriented o = orient(in);
  const SeparatorDigraph s = separator_of(in, o);
  const SeparatorSummary sum = separator_summary(s);
  json censuses = json::array();
  for (const AlternateCensus& c : sum.censuses) {
    json lengths = json::object();
    for (auto [len, n] : c.all_lengths()) lengths[std::to_string(len)] = n;
    censuses.push_back({{"r", c.r}, {"walks", c.walks.size()}, {"simple", c.simple_count()}, {"lengths", lengths}});
  }
  json out = {{"graph", in.name},
              {"vertices", sum.vertices},
              {"cycle_arcs", sum.cycle_arcs},
              {"transposition_edges", sum.transposition_edges},
              {"underlying_edges", sum.underlying_edges},
              {"oriented_cycles", sum.oriented_cycles},
              {"in_degree", {sum.min_in_degree, sum.max_in_degree}},
              {"out_degree", {sum.min_out_degree, sum.max_out_degree}},
              {"underlying_cubic", sum.underlying_cubic},
              {"connected", sum.connected},
              {"censuses", censuses}};
  try {
    const FaceComplex fc = face_complex(s);
    const EulerReport e = euler(fc);
    out["surface"] = {{"V", e.v}, {"E", e.e}, {"F", e.f}, {"chi", e.chi}, {"orientable", e.orientable},
                      {"genus", e.genus ? json(*e.genus) : json(nullptr)}, {"euler_genus", e.euler_genus}};
  } catch (const SurfaceError& err) {
    out["surface"] = {{"error", err.what()}};
  }
  return out;
}

std::string separator_dot(const ReportInput& in) {
  const Oriented o = orient(in);
  return emit_dot(separator_of(in, o), &in.labels, "S(" + in.name + ")");
}

}  // namespace cdt
