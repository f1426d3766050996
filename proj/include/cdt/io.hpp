#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cdt/catalog.hpp"
#include "cdt/graph.hpp"
#include "cdt/separator.hpp"

namespace cdt {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest order accepted by parse_graph6.
inline constexpr long kMaxGraph6Order = 1L << 20;

/// One graph6 line (an optional ">>graph6<<" prefix and trailing newline are
/// accepted). Throws Graph6Error on a malformed header or body, nonzero
/// padding bits, or an order above kMaxGraph6Order.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Label of an arc: vertex labels joined directly when all are one character
/// long ("123"), otherwise separated by spaces.
std::string arc_label(const ArcSeq& a, const LabelTable* labels);

/// Opposite arc pairs are drawn once as undirected edges, other arcs as
/// directed edges.
std::string emit_dot(const Digraph& d, std::string_view name = "G");
/// Cycle arcs directed, transposition pairs as dashed undirected edges,
/// nodes labelled by their arcs.
std::string emit_dot(const SeparatorDigraph& s, const LabelTable* labels, std::string_view name = "S");

}  // namespace cdt
