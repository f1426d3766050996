#include "cdt/cycles.hpp"

#include <algorithm>

namespace cdt {

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
  const std::size_t g = cycle.size();
  std::vector<Vertex> best(cycle.begin(), cycle.end());
  std::vector<Vertex> candidate(g);
  for (std::size_t start = 0; start < g; ++start) {
    for (int dir : {1, -1}) {
      for (std::size_t i = 0; i < g; ++i) {
        auto offset = static_cast<long>(start) + dir * static_cast<long>(i);
        auto idx = static_cast<std::size_t>(((offset % static_cast<long>(g)) + static_cast<long>(g)) %
                                            static_cast<long>(g));
        candidate[i] = cycle[idx];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

CycleSet::CycleSet(int girth, int order, std::vector<std::vector<Vertex>> cycles)
    : girth_(girth), cycles_(std::move(cycles)), by_vertex_(static_cast<std::size_t>(order)) {
  std::sort(cycles_.begin(), cycles_.end());
  for (std::size_t id = 0; id < cycles_.size(); ++id)
    for (Vertex v : cycles_[id]) by_vertex_[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
}

int CycleSet::find(std::span<const Vertex> cycle) const {
  auto key = canonical_cycle(cycle);
  auto it = std::lower_bound(cycles_.begin(), cycles_.end(), key);
  if (it == cycles_.end() || *it != key) return -1;
  return static_cast<int>(it - cycles_.begin());
}

CycleSet enumerate_girth_cycles(const Graph& g) {
  const int gth = girth(g);
  const DistanceTable dist = distances(g);
  std::vector<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);

  // The root is the least vertex of the cycle and path[1] < path[g-1], which
  // picks out the canonical form of every cycle exactly once.
  for (Vertex root = 0; root < g.order(); ++root) {
    path.assign(1, root);
    on_path[static_cast<std::size_t>(root)] = 1;
    auto extend = [&](auto&& self) -> void {
      const Vertex tip = path.back();
      const int len = static_cast<int>(path.size());
      if (len == gth) {
        if (g.adjacent(tip, root) && path[1] < path.back()) found.push_back(path);
        return;
      }
      for (Vertex w : g.neighbors(tip)) {
        if (w <= root || on_path[static_cast<std::size_t>(w)]) continue;
        // After w the walk has gth - len edges left, one of them closing back to root.
        if (dist.at(w, root) > gth - len) continue;
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = 1;
        self(self);
        on_path[static_cast<std::size_t>(w)] = 0;
        path.pop_back();
      }
    };
    extend(extend);
    on_path[static_cast<std::size_t>(root)] = 0;
  }
  return CycleSet(gth, g.order(), std::move(found));
}

std::vector<Traversal> cycles_through(const CycleSet& cs, const ArcSeq& p) {
  if (!p.is_path()) throw GraphError("cycles_through: sequence repeats a vertex");
  const auto& vs = p.vertices;
  const std::size_t len = vs.size();
  std::vector<Traversal> out;
  if (len == 0 || static_cast<int>(len) > cs.girth()) return out;
  for (int id : cs.through_vertex(vs.front())) {
    const auto& c = cs.cycle(id);
    const std::size_t g = c.size();
    auto pos = static_cast<std::size_t>(std::find(c.begin(), c.end(), vs.front()) - c.begin());
    for (bool forward : {true, false}) {
      bool match = true;
      for (std::size_t i = 0; i < len && match; ++i) {
        std::size_t idx = forward ? (pos + i) % g : (pos + g - i % g) % g;
        match = c[idx] == vs[i];
      }
      if (match) {
        out.push_back({id, forward});
        if (len > 1) break;  // a single vertex matches in both directions
      }
    }
  }
  return out;
}

PathIndex index_paths(const CycleSet& cs, int length) {
  PathIndex index;
  const auto l = static_cast<std::size_t>(length);
  for (int id = 0; id < static_cast<int>(cs.size()); ++id) {
    const auto& c = cs.cycle(id);
    const std::size_t g = c.size();
    if (l + 1 > g) continue;
    for (std::size_t start = 0; start < g; ++start) {
      ArcSeq window;
      window.vertices.reserve(l + 1);
      for (std::size_t i = 0; i <= l; ++i) window.vertices.push_back(c[(start + i) % g]);
      ArcSeq key = window.path_key();
      bool forward = key == window;
      index[std::move(key)].push_back({id, forward});
    }
  }
  return index;
}

std::vector<ArcSeq> enumerate_path_keys(const Graph& g, int length) {
  std::vector<ArcSeq> out;
  for (ArcSeq& a : enumerate_arcs(g, length))
    if (a.is_path() && a.path_key() == a) out.push_back(std::move(a));
  return out;
}

FasteningProfile fastening_profile(const Graph& g, const CycleSet& cs, int k) {
  FasteningProfile profile;
  profile.uniform = true;
  for (int i = 0; i <= k - 2; ++i) {
    FasteningLevel level;
    level.level = i;
    level.path_length = k - i - 1;
    level.expected = 1L << (i + 1);
    PathIndex index = index_paths(cs, level.path_length);
    for (const ArcSeq& key : enumerate_path_keys(g, level.path_length)) {
      auto it = index.find(key);
      long count = it == index.end() ? 0 : static_cast<long>(it->second.size());
      ++level.histogram[count];
    }
    level.uniform = level.histogram.size() == 1 && level.histogram.begin()->first == level.expected;
    profile.uniform = profile.uniform && level.uniform;
    profile.levels.push_back(std::move(level));
  }
  return profile;
}

}  // namespace cdt
