#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cdt/cycles.hpp"
#include "cdt/graph.hpp"

namespace cdt {

/// build_constraints was given a graph in which some (k-1)-path does not lie
/// on exactly two girth cycles.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Parity { equal, unequal };

/// One node per girth cycle, one labelled edge per unordered (k-1)-path.
struct ParityConstraintGraph {
  struct Constraint {
    int a = 0;
    int b = 0;
    Parity parity = Parity::equal;
    ArcSeq path;  // path key shared by cycles a and b
  };
  int nodes = 0;
  int path_length = 0;
  std::vector<Constraint> constraints;
};

ParityConstraintGraph build_constraints(const Graph& g, const CycleSet& cs, int k);

/// Per-cycle direction: true keeps the canonical direction, false reverses it.
struct OrientationAssignment {
  std::vector<bool> keep;
  friend bool operator==(const OrientationAssignment&, const OrientationAssignment&) = default;
};

/// Closed sequence cycle_0, path_0, cycle_1, ..., cycle_m = cycle_0 whose
/// parity labels multiply to "unequal".
struct OddWitness {
  std::vector<int> cycles;       // m + 1 entries, first == last
  std::vector<int> constraints;  // m entries, indices into the constraint list
};

struct SolveResult {
  std::variant<OrientationAssignment, OddWitness> outcome;
  int components = 0;  // connected components of the constraint graph

  bool solved() const { return std::holds_alternative<OrientationAssignment>(outcome); }
  const OrientationAssignment& assignment() const { return std::get<OrientationAssignment>(outcome); }
  const OddWitness& witness() const { return std::get<OddWitness>(outcome); }
};

/// Parity union-find. Component representatives (least cycle id) keep their
/// canonical direction. On inconsistency returns a shortest odd closed walk.
SolveResult solve(const ParityConstraintGraph& pcg);

/// Checks every link of the witness against the constraint graph.
bool validate_witness(const ParityConstraintGraph& pcg, const OddWitness& w);

/// Independent check: every (k-1)-arc of g is traversed by exactly one of the
/// oriented cycles.
bool verify_ooa(const Graph& g, const CycleSet& cs, int k, const OrientationAssignment& a);

/// Oriented vertex sequences: canonical cycle, reversed when keep is false.
std::vector<std::vector<Vertex>> oriented_cycles(const CycleSet& cs, const OrientationAssignment& a);

/// Turns oriented cycle listings into an assignment; throws GraphError when a
/// listing is not a girth cycle. Missing cycles stay unset in `known`.
struct PartialAssignment {
  std::vector<std::optional<bool>> keep;
};
PartialAssignment assignment_from_cycles(const CycleSet& cs,
                                         const std::vector<std::vector<Vertex>>& oriented);

/// Fills unset cycles by propagating the constraints from the set ones.
/// Returns nullopt when the fixed values contradict the constraints or some
/// component has no fixed cycle.
std::optional<OrientationAssignment> complete_assignment(const ParityConstraintGraph& pcg,
                                                         const PartialAssignment& partial);

/// Whether the assignment satisfies every constraint edge.
bool satisfies(const ParityConstraintGraph& pcg, const OrientationAssignment& a);

class KappaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 0 when not orientable as required, 1 when planar, otherwise 2 if
/// g == 2(k-1) and 3 if g > 2(k-1).
int classify_kappa(bool solved, bool planar, int girth, int k);

}  // namespace cdt
