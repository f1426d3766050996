#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cdt/graph.hpp"
#include "cdt/perm.hpp"

namespace cdt::testing {

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::build(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::build(n, e);
}

inline Graph prism(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({n + i, n + (i + 1) % n});
    e.push_back({i, n + i});
  }
  return Graph::build(2 * n, e);
}

// Random connected simple cubic graph on n (even) vertices by the pairing
// model, restarting until the pairing has no loops or multi-edges.
inline Graph random_cubic(int n, std::mt19937& rng) {
  while (true) {
    std::vector<int> points(static_cast<std::size_t>(3 * n));
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i / 3);
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u > v) std::swap(u, v);
      ok = u != v && seen.insert({u, v}).second;
      edges.push_back({u, v});
    }
    if (!ok) continue;
    Graph g = Graph::build(n, edges);
    if (is_connected(g)) return g;
  }
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.push_back({p[static_cast<std::size_t>(x.u)], p[static_cast<std::size_t>(x.v)]});
  return Graph::build(g.order(), e);
}

// Counts automorphisms by trying every vertex permutation; small graphs only.
inline long brute_force_automorphisms(const Graph& g) {
  std::vector<Vertex> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  long count = 0;
  do {
    bool ok = true;
    for (const Edge& e : edges)
      if (!g.adjacent(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    count += ok ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Shortest cycles counted by depth-first search from each least vertex,
// each cycle seen twice (two directions).
inline long brute_force_girth_cycles(const Graph& g, int girth) {
  long count = 0;
  std::vector<Vertex> path;
  std::vector<bool> used(static_cast<std::size_t>(g.order()));
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
    if (static_cast<int>(path.size()) == girth) {
      if (g.adjacent(v, start)) ++count;
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (w <= start || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    used.assign(used.size(), false);
    used[static_cast<std::size_t>(s)] = true;
    dfs(dfs, s, s);
  }
  return count / 2;
}

}  // namespace cdt::testing
