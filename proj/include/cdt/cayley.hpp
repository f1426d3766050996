#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cdt/graph.hpp"
#include "cdt/perm.hpp"

namespace cdt {

/// 3x3 matrix over the field with two elements, bit 3*i+j holding entry (i,j).
class BinaryMatrix3 {
 public:
  constexpr BinaryMatrix3() = default;
  static constexpr BinaryMatrix3 from_bits(std::uint16_t bits) {
    BinaryMatrix3 m;
    m.bits_ = bits & 0x1ffU;
    return m;
  }
  /// Rows written as three 0/1 strings, e.g. {"100", "001", "010"}.
  static BinaryMatrix3 from_rows(std::array<std::string_view, 3> rows);
  static constexpr BinaryMatrix3 identity() { return from_bits(0b100'010'001); }

  bool at(int i, int j) const { return (bits_ >> (3 * i + j) & 1U) != 0; }
  std::uint16_t bits() const { return bits_; }
  BinaryMatrix3 transposed() const;
  bool determinant() const;
  bool invertible() const { return determinant(); }
  int order() const;

  friend BinaryMatrix3 operator*(const BinaryMatrix3& a, const BinaryMatrix3& b);
  friend bool operator==(const BinaryMatrix3&, const BinaryMatrix3&) = default;
  friend auto operator<=>(const BinaryMatrix3&, const BinaryMatrix3&) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// The 168 invertible matrices, ordered by bit pattern.
std::vector<BinaryMatrix3> gl32_elements();

/// Cay(elements, gens): vertex i is elements[i]; an arc x -> s*x for every
/// generator s, where `mul(s, x)` is the group product. Throws
/// std::invalid_argument when a generator or product is not listed.
template <class T, class Mul>
Digraph cayley_digraph(const std::vector<T>& elements, const std::vector<T>& gens, Mul mul) {
  auto index = [&](const T& x) {
    auto it = std::find(elements.begin(), elements.end(), x);
    if (it == elements.end()) throw std::invalid_argument("cayley_digraph: element not in the list");
    return static_cast<Vertex>(it - elements.begin());
  };
  for (const T& s : gens) index(s);
  std::vector<Edge> arcs;
  for (const T& x : elements)
    for (const T& s : gens) arcs.push_back({index(x), index(mul(s, x))});
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph::build(static_cast<int>(elements.size()), arcs);
}

/// Composition of permutations as functions: (s*x)(p) = s(x(p)).
inline Permutation compose(const Permutation& s, const Permutation& x) { return x * s; }

/// Cay of the permutation group generated by `gens` (given in cycle notation
/// on points 1..degree).
Digraph permutation_cayley_digraph(int degree, const std::vector<std::string_view>& gens);

/// Skeletons of polyhedra built from vertex coordinates: an edge joins every
/// pair of vertices at the minimum distance.
Graph truncated_tetrahedron();
Graph truncated_octahedron();
Graph truncated_icosahedron();

}  // namespace cdt
