#pragma once

#include <map>
#include <vector>

#include "cdt/cycles.hpp"
#include "cdt/graph.hpp"
#include "cdt/ooa.hpp"

namespace cdt {

/// S(G): one vertex per (k-1)-arc of G, an arc from each vertex to its
/// successor along the oriented girth cycle through it, and a transposition
/// edge (two opposite arcs) from each vertex to its reversal.
struct SeparatorDigraph {
  int girth = 0;
  int k = 0;
  std::vector<ArcSeq> vertices;          // (k-1)-arcs, lexicographic
  std::vector<int> successor;            // A
  std::vector<int> transposition;        // T, a fixed-point-free involution
  std::vector<std::vector<int>> cycles;  // A-orbits, one per oriented girth cycle
  Digraph digraph;

  int order() const { return static_cast<int>(vertices.size()); }
  /// Id of a (k-1)-arc, or -1.
  int index_of(const ArcSeq& a) const;
};

/// Throws PreconditionError when some (k-1)-arc is not traversed by exactly
/// one of the oriented cycles.
SeparatorDigraph build_separator(const Graph& g, const CycleSet& cs, int k,
                                 const OrientationAssignment& a);

/// Closed walk following r cycle arcs and then one transposition edge,
/// repeated until it closes: an orbit of T*A^r expanded to its vertices.
struct AlternateWalk {
  std::vector<int> walk;  // (r+1) * orbit size vertices, not repeating the first
  bool simple = false;
};

struct AlternateCensus {
  int r = 0;
  std::vector<AlternateWalk> walks;
  std::size_t simple_count() const;
  /// Walk length -> number of simple walks of that length.
  std::map<int, int> simple_lengths() const;
  std::map<int, int> all_lengths() const;
};

AlternateCensus alternate_census(const SeparatorDigraph& s, int r);
std::vector<AlternateCensus> alternate_censuses(const SeparatorDigraph& s, int max_r = 4);

struct SeparatorSummary {
  int vertices = 0;
  int cycle_arcs = 0;
  int transposition_edges = 0;
  int underlying_edges = 0;
  int oriented_cycles = 0;
  int min_in_degree = 0;
  int max_in_degree = 0;
  int min_out_degree = 0;
  int max_out_degree = 0;
  bool underlying_cubic = false;
  bool connected = false;
  std::vector<AlternateCensus> censuses;  // r = 1..4
};

SeparatorSummary separator_summary(const SeparatorDigraph& s);

}  // namespace cdt
