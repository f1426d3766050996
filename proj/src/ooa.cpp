#include "cdt/ooa.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cdt {

namespace {

int parity_bit(Parity p) { return p == Parity::unequal ? 1 : 0; }

/// Union-find whose links carry the parity between a node and its parent.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0),
                                     parity_(static_cast<std::size_t>(n), 0) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  /// Root of x and the parity from x to that root.
  std::pair<int, int> find(int x) {
    int parity = 0;
    int root = x;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      parity ^= parity_[static_cast<std::size_t>(root)];
      root = parent_[static_cast<std::size_t>(root)];
    }
    // Compress, recomputing each node's parity to the root.
    int acc = parity;
    while (parent_[static_cast<std::size_t>(x)] != x) {
      int next = parent_[static_cast<std::size_t>(x)];
      int step = parity_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = root;
      parity_[static_cast<std::size_t>(x)] = acc;
      acc ^= step;
      x = next;
    }
    return {root, parity};
  }

  /// Joins with the requested relative parity; false on contradiction.
  bool unite(int a, int b, int relative) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == relative;
    if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    parity_[static_cast<std::size_t>(rb)] = pa ^ pb ^ relative;
    if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)]) ++rank_[static_cast<std::size_t>(ra)];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<int> parity_;
};

struct Incidence {
  int other;
  int constraint;
  int parity;
};

std::vector<std::vector<Incidence>> incidence(const ParityConstraintGraph& pcg) {
  std::vector<std::vector<Incidence>> adj(static_cast<std::size_t>(pcg.nodes));
  for (int i = 0; i < static_cast<int>(pcg.constraints.size()); ++i) {
    const auto& c = pcg.constraints[static_cast<std::size_t>(i)];
    adj[static_cast<std::size_t>(c.a)].push_back({c.b, i, parity_bit(c.parity)});
    adj[static_cast<std::size_t>(c.b)].push_back({c.a, i, parity_bit(c.parity)});
  }
  return adj;
}

/// Shortest closed walk with odd parity, searched in the parity double cover.
std::optional<OddWitness> shortest_odd_walk(const ParityConstraintGraph& pcg) {
  const auto adj = incidence(pcg);
  const int n = pcg.nodes;
  std::optional<OddWitness> best;
  struct Back {
    int node = -1;
    int side = -1;
    int constraint = -1;
  };
  for (int start = 0; start < n; ++start) {
    std::vector<int> dist(2 * static_cast<std::size_t>(n), -1);
    std::vector<Back> back(2 * static_cast<std::size_t>(n));
    auto slot = [n](int node, int side) { return static_cast<std::size_t>(side * n + node); };
    std::deque<std::pair<int, int>> queue{{start, 0}};
    dist[slot(start, 0)] = 0;
    while (!queue.empty()) {
      auto [u, side] = queue.front();
      queue.pop_front();
      if (best && dist[slot(u, side)] + 1 >= static_cast<int>(best->constraints.size())) break;
      for (const Incidence& e : adj[static_cast<std::size_t>(u)]) {
        int nside = side ^ e.parity;
        if (dist[slot(e.other, nside)] != -1) continue;
        dist[slot(e.other, nside)] = dist[slot(u, side)] + 1;
        back[slot(e.other, nside)] = {u, side, e.constraint};
        queue.emplace_back(e.other, nside);
      }
      if (dist[slot(start, 1)] != -1) break;
    }
    if (dist[slot(start, 1)] == -1) continue;
    const int len = dist[slot(start, 1)];
    if (best && len >= static_cast<int>(best->constraints.size())) continue;
    OddWitness w;
    int node = start, side = 1;
    w.cycles.push_back(node);
    while (!(node == start && side == 0)) {
      const Back& b = back[slot(node, side)];
      w.constraints.push_back(b.constraint);
      node = b.node;
      side = b.side;
      w.cycles.push_back(node);
    }
    std::reverse(w.cycles.begin(), w.cycles.end());
    std::reverse(w.constraints.begin(), w.constraints.end());
    best = std::move(w);
  }
  return best;
}

}  // namespace

ParityConstraintGraph build_constraints(const Graph& g, const CycleSet& cs, int k) {
  if (k < 2) throw PreconditionError("arc-transitivity must be at least 2");
  ParityConstraintGraph pcg;
  pcg.nodes = static_cast<int>(cs.size());
  pcg.path_length = k - 1;
  if (k - 1 >= cs.girth())
    throw PreconditionError("(k-1)-paths are not shorter than the girth; no path coverage");
  const PathIndex index = index_paths(cs, k - 1);
  for (const ArcSeq& key : enumerate_path_keys(g, k - 1)) {
    auto it = index.find(key);
    const std::size_t count = it == index.end() ? 0 : it->second.size();
    if (count != 2) {
      std::string text;
      for (Vertex v : key.vertices) text += (text.empty() ? "" : " ") + std::to_string(v);
      throw PreconditionError("path-coverage precondition failed: path (" + text + ") lies on " +
                              std::to_string(count) + " girth cycles, expected 2");
    }
    const Traversal& t1 = it->second[0];
    const Traversal& t2 = it->second[1];
    if (t1.cycle == t2.cycle) throw PreconditionError("a girth cycle covers a path twice");
    pcg.constraints.push_back({std::min(t1.cycle, t2.cycle), std::max(t1.cycle, t2.cycle),
                               t1.forward == t2.forward ? Parity::unequal : Parity::equal, key});
  }
  return pcg;
}

SolveResult solve(const ParityConstraintGraph& pcg) {
  SolveResult result;
  ParityUnionFind uf(pcg.nodes);
  bool consistent = true;
  for (const auto& c : pcg.constraints)
    if (!uf.unite(c.a, c.b, parity_bit(c.parity))) consistent = false;

  std::vector<char> is_root(static_cast<std::size_t>(pcg.nodes), 0);
  for (int v = 0; v < pcg.nodes; ++v) is_root[static_cast<std::size_t>(uf.find(v).first)] = 1;
  result.components = static_cast<int>(std::count(is_root.begin(), is_root.end(), 1));

  if (!consistent) {
    result.outcome = *shortest_odd_walk(pcg);
    return result;
  }
  // Least id of each component keeps its canonical direction.
  std::map<int, int> least_parity;  // root -> parity of least member
  OrientationAssignment a;
  a.keep.resize(static_cast<std::size_t>(pcg.nodes));
  for (int v = 0; v < pcg.nodes; ++v) {
    auto [root, parity] = uf.find(v);
    auto [it, inserted] = least_parity.emplace(root, parity);
    a.keep[static_cast<std::size_t>(v)] = (parity ^ it->second) == 0;
  }
  result.outcome = std::move(a);
  return result;
}

bool validate_witness(const ParityConstraintGraph& pcg, const OddWitness& w) {
  if (w.cycles.size() != w.constraints.size() + 1 || w.constraints.empty()) return false;
  if (w.cycles.front() != w.cycles.back()) return false;
  int parity = 0;
  for (std::size_t i = 0; i < w.constraints.size(); ++i) {
    if (w.constraints[i] < 0 || w.constraints[i] >= static_cast<int>(pcg.constraints.size())) return false;
    const auto& c = pcg.constraints[static_cast<std::size_t>(w.constraints[i])];
    int x = w.cycles[i], y = w.cycles[i + 1];
    if (!((c.a == x && c.b == y) || (c.a == y && c.b == x))) return false;
    parity ^= parity_bit(c.parity);
  }
  return parity == 1;
}

std::vector<std::vector<Vertex>> oriented_cycles(const CycleSet& cs, const OrientationAssignment& a) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(cs.size());
  for (int id = 0; id < static_cast<int>(cs.size()); ++id) {
    std::vector<Vertex> c = cs.cycle(id);
    if (!a.keep.at(static_cast<std::size_t>(id))) std::reverse(c.begin() + 1, c.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool verify_ooa(const Graph& g, const CycleSet& cs, int k, const OrientationAssignment& a) {
  if (a.keep.size() != cs.size() || k < 2) return false;
  const auto len = static_cast<std::size_t>(k);  // vertices per (k-1)-arc
  std::map<std::vector<Vertex>, int> hits;
  std::size_t windows = 0;
  for (const auto& c : oriented_cycles(cs, a)) {
    if (len > c.size()) return false;
    for (std::size_t s = 0; s < c.size(); ++s) {
      std::vector<Vertex> w(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = c[(s + i) % c.size()];
      ++hits[w];
      ++windows;
    }
  }
  const auto arcs = enumerate_arcs(g, k - 1);
  if (windows != arcs.size()) return false;
  for (const ArcSeq& arc : arcs) {
    auto it = hits.find(arc.vertices);
    if (it == hits.end() || it->second != 1) return false;
  }
  return true;
}

PartialAssignment assignment_from_cycles(const CycleSet& cs,
                                         const std::vector<std::vector<Vertex>>& oriented) {
  PartialAssignment p;
  p.keep.resize(cs.size());
  for (const auto& c : oriented) {
    int id = cs.find(c);
    if (id < 0) throw GraphError("listed cycle is not a girth cycle of the graph");
    const auto& canon = cs.cycle(id);
    // Direction: locate canon[0] in c and compare the successor.
    auto pos = static_cast<std::size_t>(std::find(c.begin(), c.end(), canon[0]) - c.begin());
    bool keep = c[(pos + 1) % c.size()] == canon[1];
    p.keep[static_cast<std::size_t>(id)] = keep;
  }
  return p;
}

bool satisfies(const ParityConstraintGraph& pcg, const OrientationAssignment& a) {
  return std::all_of(pcg.constraints.begin(), pcg.constraints.end(), [&](const auto& c) {
    bool same = a.keep.at(static_cast<std::size_t>(c.a)) == a.keep.at(static_cast<std::size_t>(c.b));
    return same == (c.parity == Parity::equal);
  });
}

std::optional<OrientationAssignment> complete_assignment(const ParityConstraintGraph& pcg,
                                                         const PartialAssignment& partial) {
  const auto adj = incidence(pcg);
  std::vector<std::optional<bool>> keep = partial.keep;
  keep.resize(static_cast<std::size_t>(pcg.nodes));
  std::deque<int> queue;
  for (int v = 0; v < pcg.nodes; ++v)
    if (keep[static_cast<std::size_t>(v)]) queue.push_back(v);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Incidence& e : adj[static_cast<std::size_t>(u)]) {
      bool want = *keep[static_cast<std::size_t>(u)] != (e.parity == 1);
      auto& slot = keep[static_cast<std::size_t>(e.other)];
      if (!slot) {
        slot = want;
        queue.push_back(e.other);
      } else if (*slot != want) {
        return std::nullopt;
      }
    }
  }
  OrientationAssignment a;
  for (const auto& k : keep) {
    if (!k) return std::nullopt;
    a.keep.push_back(*k);
  }
  return a;
}

int classify_kappa(bool solved, bool planar, int girth, int k) {
  if (!solved) {
    if (planar) throw KappaError("planar graph without an orientation assignment has no class");
    return 0;
  }
  if (planar) return 1;
  if (girth == 2 * (k - 1)) return 2;
  if (girth > 2 * (k - 1)) return 3;
  throw KappaError("girth below 2(k-1) has no class");
}

}  // namespace cdt
