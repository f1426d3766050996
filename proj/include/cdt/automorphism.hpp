#pragma once

#include <optional>
#include <vector>

#include "cdt/graph.hpp"
#include "cdt/perm.hpp"

namespace cdt {

/// Aut of a graph or digraph, found by individualization-refinement search
/// along the first path with orbit pruning. For digraphs the refiner counts
/// out- and in-neighbours separately.
PermGroup automorphism_group(const Graph& g);
PermGroup automorphism_group(const Digraph& d);

/// Explicit arc-preserving bijection a -> b (mapping[v] is the image of v),
/// or nullopt when the two are not isomorphic.
std::optional<std::vector<Vertex>> digraph_isomorphic(const Digraph& a, const Digraph& b);
std::optional<std::vector<Vertex>> graph_isomorphic(const Graph& a, const Graph& b);

/// Whether p maps every arc of a onto an arc of b (and a, b have equal size).
bool is_isomorphism(const Digraph& a, const Digraph& b, std::span<const Vertex> p);
bool is_automorphism(const Graph& g, const Permutation& p);
bool is_automorphism(const Digraph& d, const Permutation& p);

/// Largest l <= max_length with Aut(g) transitive on l-arcs; 0 when not even
/// vertex-transitive.
int arc_transitivity(const Graph& g, int max_length = 7);
int arc_transitivity(const Graph& g, const PermGroup& aut, int max_length = 7);

/// Aut(g)-orbits on ordered vertex pairs coincide with the distance classes.
bool is_distance_transitive(const Graph& g);
bool is_distance_transitive(const Graph& g, const PermGroup& aut);

/// Subgroup of g acting regularly on its points. Searches g itself (index 1)
/// and then its index-2 subgroups; throws std::invalid_argument when the
/// order is not the degree times 1 or 2.
std::optional<PermGroup> regular_subgroup(const PermGroup& g);

/// All index-2 subgroups, as kernels of the homomorphisms onto the group of
/// order 2, in a deterministic order.
std::vector<PermGroup> index_two_subgroups(const PermGroup& g);

}  // namespace cdt
