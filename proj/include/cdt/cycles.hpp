#pragma once

#include <map>
#include <span>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

/// Lexicographically least of the 2g rotations and reflections.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);

/// Every shortest cycle of a graph, each once, in canonical form and sorted.
class CycleSet {
 public:
  CycleSet() = default;
  CycleSet(int girth, int order, std::vector<std::vector<Vertex>> cycles);

  int girth() const { return girth_; }
  std::size_t size() const { return cycles_.size(); }
  const std::vector<Vertex>& cycle(int id) const { return cycles_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::vector<Vertex>>& cycles() const { return cycles_; }
  /// Ids of the cycles through v.
  std::span<const int> through_vertex(Vertex v) const { return by_vertex_.at(static_cast<std::size_t>(v)); }
  /// Id of a cycle given in any rotation/reflection, or -1.
  int find(std::span<const Vertex> cycle) const;

 private:
  int girth_ = 0;
  std::vector<std::vector<Vertex>> cycles_;
  std::vector<std::vector<int>> by_vertex_;
};

CycleSet enumerate_girth_cycles(const Graph& g);

/// A cycle containing a path; `forward` when the cycle's canonical vertex
/// order runs along the path as given.
struct Traversal {
  int cycle = 0;
  bool forward = true;
  friend bool operator==(const Traversal&, const Traversal&) = default;
};

/// Throws GraphError when p repeats a vertex.
std::vector<Traversal> cycles_through(const CycleSet& cs, const ArcSeq& p);

/// Cycles per unordered path of a fixed length, directions taken relative to
/// the path's key (ArcSeq::path_key).
using PathIndex = std::map<ArcSeq, std::vector<Traversal>>;
PathIndex index_paths(const CycleSet& cs, int length);

/// All paths of the given length, one per unordered path, as keys.
std::vector<ArcSeq> enumerate_path_keys(const Graph& g, int length);

struct FasteningLevel {
  int level = 0;        // i
  int path_length = 0;  // k - i - 1
  long expected = 0;    // 2^(i+1)
  std::map<long, long> histogram;  // cycles-per-path -> number of paths
  bool uniform = false;
};

struct FasteningProfile {
  std::vector<FasteningLevel> levels;
  bool uniform = false;
};

/// Levels i = 0..k-2; paths of length k-i-1.
FasteningProfile fastening_profile(const Graph& g, const CycleSet& cs, int k);

}  // namespace cdt
