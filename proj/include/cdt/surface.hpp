#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cdt/graph.hpp"
#include "cdt/separator.hpp"

namespace cdt {

/// Some edge of the underlying graph does not lie on exactly two face sides.
class SurfaceError : public std::runtime_error {
 public:
  SurfaceError(const std::string& what, Edge edge, int sides)
      : std::runtime_error(what), edge(edge), sides(sides) {}
  Edge edge;
  int sides;
};

/// Polygonal complex: faces are closed walks in the underlying graph.
struct FaceComplex {
  Graph skeleton;
  std::vector<std::vector<Vertex>> faces;
  int cycle_faces = 0;      // leading faces taken from oriented girth cycles
  int alternate_faces = 0;  // the rest, from simple alternate cycles
};

/// Checks that every edge has exactly two face sides; throws SurfaceError
/// naming the first offending edge otherwise.
void check_coverage(const FaceComplex& fc);

/// Oriented girth cycles plus the simple alternate (r = 1) cycles of S(G).
FaceComplex face_complex(const SeparatorDigraph& s);

struct EulerReport {
  int v = 0;
  int e = 0;
  int f = 0;
  int chi = 0;
  bool orientable = false;
  std::optional<int> genus;  // (2 - chi) / 2, only when orientable
  int euler_genus = 0;       // 2 - chi
};

/// Orientability by 2-colouring faces so that the two sides of every edge
/// run in opposite directions.
EulerReport euler(const FaceComplex& fc);

}  // namespace cdt
