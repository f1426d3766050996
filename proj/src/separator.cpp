#include "cdt/separator.hpp"

#include <algorithm>
#include <string>

namespace cdt {

int SeparatorDigraph::index_of(const ArcSeq& a) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
  if (it == vertices.end() || *it != a) return -1;
  return static_cast<int>(it - vertices.begin());
}

SeparatorDigraph build_separator(const Graph& g, const CycleSet& cs, int k,
                                 const OrientationAssignment& a) {
  if (k < 2 || k - 1 >= cs.girth()) throw PreconditionError("build_separator: need 2 <= k <= girth");
  SeparatorDigraph s;
  s.girth = cs.girth();
  s.k = k;
  s.vertices = enumerate_arcs(g, k - 1);
  const int n = s.order();
  s.successor.assign(static_cast<std::size_t>(n), -1);

  auto window = [&](const std::vector<Vertex>& c, std::size_t start) {
    ArcSeq w;
    for (int i = 0; i < k; ++i) w.vertices.push_back(c[(start + static_cast<std::size_t>(i)) % c.size()]);
    return w;
  };
  for (const std::vector<Vertex>& c : oriented_cycles(cs, a)) {
    std::vector<int> orbit;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = s.index_of(window(c, i));
      const int to = s.index_of(window(c, i + 1));
      if (from < 0 || to < 0) throw PreconditionError("build_separator: cycle window is not an arc of the graph");
      if (s.successor[static_cast<std::size_t>(from)] != -1)
        throw PreconditionError("build_separator: an arc lies on two oriented cycles");
      s.successor[static_cast<std::size_t>(from)] = to;
      orbit.push_back(from);
    }
    s.cycles.push_back(std::move(orbit));
  }
  for (int v = 0; v < n; ++v)
    if (s.successor[static_cast<std::size_t>(v)] == -1)
      throw PreconditionError("build_separator: an arc lies on no oriented cycle");

  s.transposition.resize(static_cast<std::size_t>(n));
  std::vector<Edge> arcs;
  for (int v = 0; v < n; ++v) {
    s.transposition[static_cast<std::size_t>(v)] = s.index_of(s.vertices[static_cast<std::size_t>(v)].reversed());
    arcs.push_back({v, s.successor[static_cast<std::size_t>(v)]});
    arcs.push_back({v, s.transposition[static_cast<std::size_t>(v)]});
  }
  s.digraph = Digraph::build(n, arcs);
  return s;
}

std::size_t AlternateCensus::simple_count() const {
  return static_cast<std::size_t>(std::count_if(walks.begin(), walks.end(), [](const AlternateWalk& w) { return w.simple; }));
}

std::map<int, int> AlternateCensus::simple_lengths() const {
  std::map<int, int> out;
  for (const AlternateWalk& w : walks)
    if (w.simple) ++out[static_cast<int>(w.walk.size())];
  return out;
}

std::map<int, int> AlternateCensus::all_lengths() const {
  std::map<int, int> out;
  for (const AlternateWalk& w : walks) ++out[static_cast<int>(w.walk.size())];
  return out;
}

AlternateCensus alternate_census(const SeparatorDigraph& s, int r) {
  AlternateCensus census;
  census.r = r;
  const int n = s.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    AlternateWalk w;
    int v = start;
    do {
      seen[static_cast<std::size_t>(v)] = 1;
      for (int i = 0; i < r; ++i) {
        w.walk.push_back(v);
        v = s.successor[static_cast<std::size_t>(v)];
      }
      w.walk.push_back(v);
      v = s.transposition[static_cast<std::size_t>(v)];
    } while (v != start);
    w.simple = true;
    for (int x : w.walk)
      if (hits[static_cast<std::size_t>(x)]++ > 0) w.simple = false;
    for (int x : w.walk) hits[static_cast<std::size_t>(x)] = 0;
    census.walks.push_back(std::move(w));
  }
  return census;
}

std::vector<AlternateCensus> alternate_censuses(const SeparatorDigraph& s, int max_r) {
  std::vector<AlternateCensus> out;
  for (int r = 1; r <= max_r; ++r) out.push_back(alternate_census(s, r));
  return out;
}

SeparatorSummary separator_summary(const SeparatorDigraph& s) {
  SeparatorSummary sum;
  const Digraph& d = s.digraph;
  sum.vertices = s.order();
  sum.oriented_cycles = static_cast<int>(s.cycles.size());
  for (const auto& c : s.cycles) sum.cycle_arcs += static_cast<int>(c.size());
  sum.transposition_edges = sum.vertices / 2;
  const Graph u = underlying(d);
  sum.underlying_edges = static_cast<int>(u.edge_count());
  sum.underlying_cubic = u.is_regular(3);
  sum.connected = sum.vertices > 0 && is_connected(u);
  if (sum.vertices > 0) {
    sum.min_in_degree = sum.min_out_degree = sum.vertices;
    for (int v = 0; v < sum.vertices; ++v) {
      const int in = static_cast<int>(d.in(v).size());
      const int out = static_cast<int>(d.out(v).size());
      sum.min_in_degree = std::min(sum.min_in_degree, in);
      sum.max_in_degree = std::max(sum.max_in_degree, in);
      sum.min_out_degree = std::min(sum.min_out_degree, out);
      sum.max_out_degree = std::max(sum.max_out_degree, out);
    }
  }
  sum.censuses = alternate_censuses(s, 4);
  return sum;
}

}  // namespace cdt
