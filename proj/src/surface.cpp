#include "cdt/surface.hpp"

#include <map>
#include <queue>
#include <string>

namespace cdt {
namespace {

struct Side {
  int face = 0;
  bool forward = true;  // walk runs from the smaller end to the larger
};

std::map<Edge, std::vector<Side>> sides_of(const FaceComplex& fc) {
  std::map<Edge, std::vector<Side>> sides;
  for (int f = 0; f < static_cast<int>(fc.faces.size()); ++f) {
    const auto& walk = fc.faces[static_cast<std::size_t>(f)];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Vertex a = walk[i];
      const Vertex b = walk[(i + 1) % walk.size()];
      if (!fc.skeleton.adjacent(a, b))
        throw SurfaceError("face walk uses a non-edge " + std::to_string(a) + "-" + std::to_string(b),
                           Edge{a, b}, 0);
      sides[Edge{std::min(a, b), std::max(a, b)}].push_back({f, a < b});
    }
  }
  return sides;
}

}  // namespace

void check_coverage(const FaceComplex& fc) {
  const auto sides = sides_of(fc);
  for (const Edge& e : fc.skeleton.edges()) {
    auto it = sides.find(e);
    const int count = it == sides.end() ? 0 : static_cast<int>(it->second.size());
    if (count != 2)
      throw SurfaceError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " lies on " +
                             std::to_string(count) + " face sides",
                         e, count);
  }
}

FaceComplex face_complex(const SeparatorDigraph& s) {
  FaceComplex fc;
  fc.skeleton = underlying(s.digraph);
  for (const auto& c : s.cycles) fc.faces.push_back(c);
  fc.cycle_faces = static_cast<int>(fc.faces.size());
  for (const AlternateWalk& w : alternate_census(s, 1).walks)
    if (w.simple) fc.faces.push_back(w.walk);
  fc.alternate_faces = static_cast<int>(fc.faces.size()) - fc.cycle_faces;
  check_coverage(fc);
  return fc;
}

EulerReport euler(const FaceComplex& fc) {
  EulerReport r;
  r.v = fc.skeleton.order();
  r.e = static_cast<int>(fc.skeleton.edge_count());
  r.f = static_cast<int>(fc.faces.size());
  r.chi = r.v - r.e + r.f;
  r.euler_genus = 2 - r.chi;

  // flip[f] says whether face f must be reversed; two sides of one edge need
  // opposite directions after flipping.
  const auto sides = sides_of(fc);
  std::vector<std::vector<std::pair<int, bool>>> adj(fc.faces.size());  // (other face, must differ)
  bool consistent = true;
  for (const auto& [edge, list] : sides) {
    if (list.size() != 2) {
      consistent = false;
      continue;
    }
    const bool differ = list[0].forward == list[1].forward;
    if (list[0].face == list[1].face) {
      if (differ) consistent = false;
      continue;
    }
    adj[static_cast<std::size_t>(list[0].face)].push_back({list[1].face, differ});
    adj[static_cast<std::size_t>(list[1].face)].push_back({list[0].face, differ});
  }
  std::vector<int> flip(fc.faces.size(), -1);
  for (std::size_t root = 0; root < fc.faces.size() && consistent; ++root) {
    if (flip[root] != -1) continue;
    flip[root] = 0;
    std::queue<int> queue;
    queue.push(static_cast<int>(root));
    while (!queue.empty() && consistent) {
      const int f = queue.front();
      queue.pop();
      for (auto [other, differ] : adj[static_cast<std::size_t>(f)]) {
        const int want = flip[static_cast<std::size_t>(f)] ^ (differ ? 1 : 0);
        int& got = flip[static_cast<std::size_t>(other)];
        if (got == -1) {
          got = want;
          queue.push(other);
        } else if (got != want) {
          consistent = false;
        }
      }
    }
  }
  r.orientable = consistent;
  if (r.orientable && r.chi % 2 == 0) r.genus = (2 - r.chi) / 2;
  return r;
}

}  // namespace cdt
