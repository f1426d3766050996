#include "cdt/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cdt {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

std::vector<int> bfs_from(const Graph& g, Vertex root) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreached);
  std::deque<Vertex> queue{root};
  dist[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreached) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Graph Graph::build(int order, std::span<const Edge> edges) {
  if (order < 0) throw GraphError("negative order");
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(order));
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) {
      throw GraphError("duplicate edge " + std::to_string(key.u) + "-" + std::to_string(key.v));
    }
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  g.edge_count_ = seen.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::is_regular(int d) const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [d](const auto& row) { return static_cast<int>(row.size()) == d; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

Digraph Digraph::build(int order, std::span<const Edge> arcs) {
  if (order < 0) throw GraphError("negative order");
  Digraph d;
  d.out_.resize(static_cast<std::size_t>(order));
  d.in_.resize(static_cast<std::size_t>(order));
  for (const Edge& a : arcs) {
    if (a.u < 0 || a.v < 0 || a.u >= order || a.v >= order)
      throw GraphError("arc endpoint out of range");
    if (a.u == a.v) throw GraphError("self-loop arc at " + std::to_string(a.u));
    d.out_[static_cast<std::size_t>(a.u)].push_back(a.v);
    d.in_[static_cast<std::size_t>(a.v)].push_back(a.u);
  }
  for (auto& row : d.out_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw GraphError("repeated arc");
  }
  for (auto& row : d.in_) std::sort(row.begin(), row.end());
  d.arc_count_ = arcs.size();
  return d;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto row = out(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out(u)) result.push_back({u, v});
  return result;
}

Digraph Digraph::of(const Graph& g) {
  std::vector<Edge> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return build(g.order(), arcs);
}

ArcSeq ArcSeq::reversed() const {
  return ArcSeq{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

ArcSeq ArcSeq::path_key() const {
  ArcSeq r = reversed();
  return r.vertices < vertices ? r : *this;
}

bool ArcSeq::is_path() const {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_arc_of(const Graph& g, const ArcSeq& a) {
  const auto& vs = a.vertices;
  if (vs.size() < 2) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] < 0 || vs[i] >= g.order()) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  for (std::size_t i = 0; i + 2 < vs.size(); ++i)
    if (vs[i] == vs[i + 2]) return false;
  return true;
}

DistanceTable distances(const Graph& g) {
  DistanceTable table;
  table.order = g.order();
  table.dist.resize(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) {
    auto row = bfs_from(g, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      int d = row[static_cast<std::size_t>(v)];
      if (d == kUnreached) {
        throw GraphError("graph is disconnected: no path " + std::to_string(u) + " -> " +
                         std::to_string(v));
      }
      table.dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(g.order()) +
                 static_cast<std::size_t>(v)] = d;
      table.diameter = std::max(table.diameter, d);
    }
  }
  return table;
}

int girth(const Graph& g) {
  int best = kUnreached;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::deque<Vertex> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      const int du = dist[static_cast<std::size_t>(u)];
      if (2 * du + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] == kUnreached) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min(best, du + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  if (best == kUnreached) throw GraphError("graph is acyclic: girth undefined");
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreached; });
}

bool is_weakly_connected(const Digraph& d) { return is_connected(underlying(d)); }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<ArcSeq> enumerate_arcs(const Graph& g, int length) {
  if (length < 1) throw GraphError("arc length must be at least 1");
  std::vector<ArcSeq> out;
  std::vector<Vertex> walk;
  walk.reserve(static_cast<std::size_t>(length) + 1);
  // Depth-first over sorted neighbour lists yields lexicographic order.
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == length + 1) {
      out.push_back(ArcSeq{walk});
      return;
    }
    Vertex tip = walk.back();
    Vertex back = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
    for (Vertex w : g.neighbors(tip)) {
      if (w == back) continue;
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    walk.assign(1, v);
    extend(extend);
  }
  return out;
}

Graph underlying(const Digraph& d) {
  std::set<Edge> edges;
  for (const Edge& a : d.arcs()) edges.insert({std::min(a.u, a.v), std::max(a.u, a.v)});
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::build(d.order(), list);
}

Ternary is_hamiltonian(const Graph& g, std::chrono::milliseconds budget) {
  const int n = g.order();
  if (n == 0) return Ternary::no;
  if (n == 1) return Ternary::yes;
  if (n == 2) return Ternary::no;  // a single edge is not a cycle
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 2) return Ternary::no;
  if (!is_connected(g)) return Ternary::no;

  const auto deadline = std::chrono::steady_clock::now() + budget;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  // available[v]: neighbours of v that are unvisited or path endpoints.
  std::vector<int> available(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) available[static_cast<std::size_t>(v)] = g.degree(v);
  std::uint64_t nodes = 0;
  bool timed_out = false;

  const Vertex start = 0;
  visited[0] = 1;

  auto search = [&](auto&& self, Vertex tip, int depth) -> bool {
    if ((++nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline) {
      timed_out = true;
      return false;
    }
    if (depth == n) return g.adjacent(tip, start);
    std::vector<Vertex> next;
    for (Vertex w : g.neighbors(tip))
      if (!visited[static_cast<std::size_t>(w)]) next.push_back(w);
    std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return std::pair(available[static_cast<std::size_t>(a)], a) <
             std::pair(available[static_cast<std::size_t>(b)], b);
    });
    for (Vertex w : next) {
      // tip becomes interior unless it is the start; its unvisited neighbours
      // other than w lose one option.
      visited[static_cast<std::size_t>(w)] = 1;
      bool feasible = true;
      std::vector<Vertex> touched;
      if (tip != start) {
        for (Vertex y : g.neighbors(tip)) {
          if (visited[static_cast<std::size_t>(y)]) continue;
          touched.push_back(y);
          if (--available[static_cast<std::size_t>(y)] < 2) feasible = false;
        }
      }
      if (feasible && depth + 1 < n) {
        // The start must keep an unvisited neighbour or the new tip to close.
        bool can_close = g.adjacent(start, w);
        for (Vertex y : g.neighbors(start))
          if (!visited[static_cast<std::size_t>(y)]) can_close = true;
        feasible = can_close;
      }
      if (feasible && self(self, w, depth + 1)) return true;
      for (Vertex y : touched) ++available[static_cast<std::size_t>(y)];
      visited[static_cast<std::size_t>(w)] = 0;
      if (timed_out) return false;
    }
    return false;
  };
  bool found = search(search, start, 1);
  if (found) return Ternary::yes;
  return timed_out ? Ternary::timeout : Ternary::no;
}

bool is_planar(const Graph& g) {
  const auto m = static_cast<long>(g.edge_count());
  const long n = g.order();
  if (n >= 3 && m > 3 * n - 6) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges())
    boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace cdt
