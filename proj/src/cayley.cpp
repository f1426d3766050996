#include "cdt/cayley.hpp"

#include <cmath>

namespace cdt {

BinaryMatrix3 BinaryMatrix3::from_rows(std::array<std::string_view, 3> rows) {
  std::uint16_t bits = 0;
  for (int i = 0; i < 3; ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != 3) throw std::invalid_argument("matrix row needs 3 digits");
    for (int j = 0; j < 3; ++j) {
      const char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != '0' && c != '1') throw std::invalid_argument("matrix entries are 0 or 1");
      if (c == '1') bits = static_cast<std::uint16_t>(bits | 1U << (3 * i + j));
    }
  }
  return from_bits(bits);
}

BinaryMatrix3 BinaryMatrix3::transposed() const {
  std::uint16_t bits = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (at(i, j)) bits = static_cast<std::uint16_t>(bits | 1U << (3 * j + i));
  return from_bits(bits);
}

bool BinaryMatrix3::determinant() const {
  // expansion along the first row; + and - agree mod 2
  const bool m0 = (at(1, 1) && at(2, 2)) != (at(1, 2) && at(2, 1));
  const bool m1 = (at(1, 0) && at(2, 2)) != (at(1, 2) && at(2, 0));
  const bool m2 = (at(1, 0) && at(2, 1)) != (at(1, 1) && at(2, 0));
  return ((at(0, 0) && m0) != (at(0, 1) && m1)) != (at(0, 2) && m2);
}

BinaryMatrix3 operator*(const BinaryMatrix3& a, const BinaryMatrix3& b) {
  std::uint16_t bits = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      bool v = false;
      for (int l = 0; l < 3; ++l) v = v != (a.at(i, l) && b.at(l, j));
      if (v) bits = static_cast<std::uint16_t>(bits | 1U << (3 * i + j));
    }
  return BinaryMatrix3::from_bits(bits);
}

int BinaryMatrix3::order() const {
  if (!invertible()) throw std::domain_error("singular matrix has no order");
  BinaryMatrix3 x = *this;
  int n = 1;
  while (x != identity()) {
    x = x * *this;
    ++n;
  }
  return n;
}

std::vector<BinaryMatrix3> gl32_elements() {
  std::vector<BinaryMatrix3> out;
  for (std::uint16_t bits = 0; bits < 512; ++bits) {
    const auto m = BinaryMatrix3::from_bits(bits);
    if (m.invertible()) out.push_back(m);
  }
  return out;
}

Digraph permutation_cayley_digraph(int degree, const std::vector<std::string_view>& gens) {
  std::vector<Permutation> perms;
  for (std::string_view g : gens) perms.push_back(Permutation::from_cycles(degree, g, 1));
  return cayley_digraph(generate_elements(degree, perms), perms, compose);
}

namespace {

using Point = std::array<double, 3>;

Graph skeleton(const std::vector<Point>& pts) {
  auto dist = [&](std::size_t i, std::size_t j) {
    double s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
    return std::sqrt(s);
  };
  double best = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist(i, j));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (dist(i, j) < best * (1 + 1e-9)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph::build(static_cast<int>(pts.size()), edges);
}

// Every point obtained from `base` by the given coordinate permutations and
// all sign changes, duplicates removed.
std::vector<Point> orbit(const std::vector<Point>& bases, bool all_permutations, bool even_signs_only) {
  std::vector<std::array<int, 3>> perms;
  if (all_permutations)
    perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  else
    perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<Point> out;
  for (const Point& base : bases)
    for (const auto& p : perms)
      for (int signs = 0; signs < 8; ++signs) {
        if (even_signs_only && __builtin_popcount(static_cast<unsigned>(signs)) % 2 != 0) continue;
        Point q;
        for (std::size_t c = 0; c < 3; ++c)
          q[c] = base[static_cast<std::size_t>(p[c])] * ((signs >> c & 1) != 0 ? -1.0 : 1.0);
        bool dup = std::any_of(out.begin(), out.end(), [&](const Point& r) {
          return std::abs(r[0] - q[0]) + std::abs(r[1] - q[1]) + std::abs(r[2] - q[2]) < 1e-9;
        });
        if (!dup) out.push_back(q);
      }
  return out;
}

}  // namespace

Graph truncated_tetrahedron() { return skeleton(orbit({{3, 1, 1}}, true, true)); }

Graph truncated_octahedron() { return skeleton(orbit({{0, 1, 2}}, true, false)); }

Graph truncated_icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  return skeleton(orbit({{0, 1, 3 * phi}, {1, 2 + phi, 2 * phi}, {phi, 2, phi * phi * phi}}, false, false));
}

}  // namespace cdt
