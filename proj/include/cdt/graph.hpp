#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdt {

using Vertex = int;

/// Raised for malformed graph input: bad endpoints, loops, duplicates,
/// disconnected or acyclic graphs where a metric needs otherwise.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over dense ids 0..order-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on out-of-range endpoints, self-loops or duplicate edges.
  static Graph build(int order, std::span<const Edge> edges);
  static Graph build(int order, std::initializer_list<Edge> edges) {
    return build(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_regular(int degree) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Directed graph without loops or repeated arcs; keeps both out- and
/// in-neighbour lists sorted.
class Digraph {
 public:
  Digraph() = default;
  static Digraph build(int order, std::span<const Edge> arcs);
  static Digraph build(int order, std::initializer_list<Edge> arcs) {
    return build(order, std::span<const Edge>(arcs.begin(), arcs.size()));
  }

  int order() const { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const { return arc_count_; }
  std::span<const Vertex> out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  bool has_arc(Vertex u, Vertex v) const;
  std::vector<Edge> arcs() const;

  /// Symmetric digraph: every edge becomes an opposite pair of arcs.
  static Digraph of(const Graph& g);

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// An l-arc: l+1 vertices, consecutive ones adjacent, never stepping back
/// to the vertex just left.
struct ArcSeq {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  ArcSeq reversed() const;
  /// Smaller-endpoint-first orientation; one key per unordered path.
  ArcSeq path_key() const;
  /// True when no vertex repeats.
  bool is_path() const;

  friend bool operator==(const ArcSeq&, const ArcSeq&) = default;
  friend auto operator<=>(const ArcSeq&, const ArcSeq&) = default;
};

bool is_arc_of(const Graph& g, const ArcSeq& a);

struct DistanceTable {
  int order = 0;
  int diameter = 0;
  std::vector<int> dist;  // row-major order*order, edge hops

  int at(Vertex u, Vertex v) const {
    return dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(order) + static_cast<std::size_t>(v)];
  }
};

DistanceTable distances(const Graph& g);
int girth(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// All l-arcs in lexicographic order of their vertex sequences.
std::vector<ArcSeq> enumerate_arcs(const Graph& g, int length);

/// Forgets arc directions; an opposite pair collapses to one edge.
Graph underlying(const Digraph& d);

enum class Ternary { no, yes, timeout };

Ternary is_hamiltonian(const Graph& g,
                       std::chrono::milliseconds budget = std::chrono::seconds(60));
bool is_planar(const Graph& g);

/// Breadth-first connectivity on a digraph's underlying graph.
bool is_weakly_connected(const Digraph& d);

}  // namespace cdt
