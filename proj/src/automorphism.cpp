#include "cdt/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cdt {
namespace {

struct SearchGraph {
  bool directed = false;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  int order() const { return static_cast<int>(out.size()); }
  bool has_arc(int u, int v) const {
    const auto& row = out[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
  }
};

SearchGraph search_graph(const Graph& g) {
  SearchGraph s;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    s.out.emplace_back(nb.begin(), nb.end());
  }
  s.in = s.out;
  return s;
}

SearchGraph search_graph(const Digraph& d) {
  SearchGraph s;
  s.directed = true;
  for (Vertex v = 0; v < d.order(); ++v) {
    auto o = d.out(v);
    auto i = d.in(v);
    s.out.emplace_back(o.begin(), o.end());
    s.in.emplace_back(i.begin(), i.end());
  }
  return s;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 31);
}

// Ordered partition of the vertices. Cells are identified by their start
// position in elems.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> cell_of;  // vertex -> start of its cell
  std::vector<int> end;      // start -> one past the cell's last position
  int cells = 0;

  explicit Partition(int n) : elems(static_cast<std::size_t>(n)), pos(elems.size()),
                              cell_of(elems.size(), 0), end(elems.size(), 0), cells(n > 0 ? 1 : 0) {
    std::iota(elems.begin(), elems.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    if (n > 0) end[0] = n;
  }

  int order() const { return static_cast<int>(elems.size()); }
  bool discrete() const { return cells == order(); }
  int size_of(int start) const { return end[static_cast<std::size_t>(start)] - start; }

  // Moves v to the front of its cell and splits it off; returns the new
  // singleton cell.
  int individualize(int v) {
    const int c = cell_of[static_cast<std::size_t>(v)];
    const int e = end[static_cast<std::size_t>(c)];
    const int first = elems[static_cast<std::size_t>(c)];
    const int p = pos[static_cast<std::size_t>(v)];
    std::swap(elems[static_cast<std::size_t>(c)], elems[static_cast<std::size_t>(p)]);
    pos[static_cast<std::size_t>(first)] = p;
    pos[static_cast<std::size_t>(v)] = c;
    end[static_cast<std::size_t>(c)] = c + 1;
    end[static_cast<std::size_t>(c + 1)] = e;
    for (int i = c + 1; i < e; ++i) cell_of[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = c + 1;
    ++cells;
    return c;
  }

  // First non-singleton cell among those of least size.
  int target_cell() const {
    int best = -1;
    int best_size = order() + 1;
    for (int c = 0; c < order(); c = end[static_cast<std::size_t>(c)]) {
      const int s = size_of(c);
      if (s > 1 && s < best_size) {
        best = c;
        best_size = s;
      }
    }
    return best;
  }

  std::vector<int> cell(int start) const {
    std::vector<int> out(elems.begin() + start, elems.begin() + end[static_cast<std::size_t>(start)]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Equitable refinement. The returned trace hash depends only on positions
// and counts, so isomorphic inputs give equal traces.
std::uint64_t refine(const SearchGraph& g, Partition& p, std::vector<int> splitters) {
  const int n = g.order();
  std::uint64_t trace = 0x51ed2701ULL;
  std::deque<int> queue;
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  for (int s : splitters) {
    queue.push_back(s);
    queued[static_cast<std::size_t>(s)] = 1;
  }
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<int> touched;
  std::vector<int> touched_cells;
  std::vector<int> scratch;

  while (!queue.empty() && !p.discrete()) {
    const int s = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(s)] = 0;
    const std::vector<int> splitter(p.elems.begin() + s, p.elems.begin() + p.end[static_cast<std::size_t>(s)]);
    trace = mix(trace, static_cast<std::uint64_t>(s) * 1000003ULL + splitter.size());

    for (int pass = 0; pass < (g.directed ? 2 : 1); ++pass) {
      // pass 0 counts arcs into the splitter, pass 1 arcs out of it
      for (int w : splitter) {
        const auto& from = pass == 0 ? g.in[static_cast<std::size_t>(w)] : g.out[static_cast<std::size_t>(w)];
        for (int u : from) {
          if (count[static_cast<std::size_t>(u)]++ == 0) touched.push_back(u);
        }
      }
      touched_cells.clear();
      for (int u : touched) touched_cells.push_back(p.cell_of[static_cast<std::size_t>(u)]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());

      for (int c : touched_cells) {
        const int e = p.end[static_cast<std::size_t>(c)];
        if (e - c == 1) {
          trace = mix(trace, static_cast<std::uint64_t>(count[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(c)])]));
          continue;
        }
        scratch.assign(p.elems.begin() + c, p.elems.begin() + e);
        std::stable_sort(scratch.begin(), scratch.end(), [&](int a, int b) {
          return count[static_cast<std::size_t>(a)] < count[static_cast<std::size_t>(b)];
        });
        const int lo = count[static_cast<std::size_t>(scratch.front())];
        const int hi = count[static_cast<std::size_t>(scratch.back())];
        trace = mix(trace, static_cast<std::uint64_t>(c) << 20 | static_cast<std::uint64_t>(lo) << 10 | static_cast<std::uint64_t>(hi));
        if (lo == hi) continue;

        std::vector<int> fragments;
        for (int i = 0; i < e - c; ++i) {
          const int v = scratch[static_cast<std::size_t>(i)];
          p.elems[static_cast<std::size_t>(c + i)] = v;
          p.pos[static_cast<std::size_t>(v)] = c + i;
          if (i == 0 || count[static_cast<std::size_t>(v)] != count[static_cast<std::size_t>(scratch[static_cast<std::size_t>(i - 1)])])
            fragments.push_back(c + i);
        }
        fragments.push_back(e);
        int largest = 0;
        for (std::size_t f = 0; f + 1 < fragments.size(); ++f) {
          const int fs = fragments[f];
          const int fe = fragments[f + 1];
          p.end[static_cast<std::size_t>(fs)] = fe;
          for (int i = fs; i < fe; ++i) p.cell_of[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)])] = fs;
          trace = mix(trace, static_cast<std::uint64_t>(fe - fs) << 16 |
                                 static_cast<std::uint64_t>(count[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(fs)])]));
          if (fe - fs > fragments[static_cast<std::size_t>(largest) + 1] - fragments[static_cast<std::size_t>(largest)])
            largest = static_cast<int>(f);
        }
        p.cells += static_cast<int>(fragments.size()) - 2;
        const bool was_queued = queued[static_cast<std::size_t>(c)] != 0;
        for (std::size_t f = 0; f + 1 < fragments.size(); ++f) {
          const int fs = fragments[f];
          if (queued[static_cast<std::size_t>(fs)]) continue;
          if (!was_queued && static_cast<int>(f) == largest) continue;
          queue.push_back(fs);
          queued[static_cast<std::size_t>(fs)] = 1;
        }
      }
      for (int u : touched) count[static_cast<std::size_t>(u)] = 0;
      touched.clear();
    }
  }
  return mix(trace, static_cast<std::uint64_t>(p.cells));
}

struct PathLevel {
  Partition part;  // before individualization
  int target = 0;
  std::vector<int> cell;
  int chosen = 0;
  std::uint64_t trace = 0;  // after individualizing `chosen` and refining
};

struct FirstPath {
  std::uint64_t root_trace = 0;
  std::vector<PathLevel> levels;
  std::vector<int> leaf;
};

FirstPath first_path(const SearchGraph& g) {
  FirstPath fp;
  Partition p(g.order());
  fp.root_trace = refine(g, p, {0});
  while (!p.discrete()) {
    PathLevel level{p, p.target_cell(), {}, 0, 0};
    level.cell = p.cell(level.target);
    level.chosen = level.cell.front();
    const int s = p.individualize(level.chosen);
    level.trace = refine(g, p, {s});
    fp.levels.push_back(std::move(level));
  }
  fp.leaf = p.elems;
  return fp;
}

using LeafTest = std::function<bool(const std::vector<int>&)>;

// Depth-first search below a node at `depth` whose partition matches the
// first path there; returns the first leaf accepted by `accept`.
std::optional<std::vector<int>> descend(const SearchGraph& g, const FirstPath& fp, std::size_t depth,
                                        const Partition& p, const LeafTest& accept) {
  if (depth == fp.levels.size()) {
    if (!p.discrete()) return std::nullopt;
    if (accept(p.elems)) return p.elems;
    return std::nullopt;
  }
  const PathLevel& ref = fp.levels[depth];
  const int t = p.target_cell();
  if (t != ref.target || p.size_of(t) != static_cast<int>(ref.cell.size())) return std::nullopt;
  for (int u : p.cell(t)) {
    Partition q = p;
    const int s = q.individualize(u);
    if (refine(g, q, {s}) != ref.trace) continue;
    if (auto leaf = descend(g, fp, depth + 1, q, accept)) return leaf;
  }
  return std::nullopt;
}

std::vector<int> leaf_map(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> perm(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) perm[static_cast<std::size_t>(from[i])] = to[i];
  return perm;
}

bool preserves(const SearchGraph& a, const SearchGraph& b, const std::vector<int>& perm) {
  for (int u = 0; u < a.order(); ++u) {
    if (a.out[static_cast<std::size_t>(u)].size() != b.out[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])].size())
      return false;
    for (int v : a.out[static_cast<std::size_t>(u)])
      if (!b.has_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

class Orbits {
 public:
  explicit Orbits(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void add(const Permutation& p) {
    for (int x = 0; x < p.degree(); ++x) {
      int a = find(x), b = find(p[x]);
      if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

 private:
  std::vector<int> parent_;
};

PermGroup search_automorphisms(const SearchGraph& g) {
  const int n = g.order();
  const FirstPath fp = first_path(g);
  std::vector<Permutation> gens;
  auto accept = [&](const std::vector<int>& leaf) { return preserves(g, g, leaf_map(fp.leaf, leaf)); };

  for (auto l = static_cast<long>(fp.levels.size()) - 1; l >= 0; --l) {
    const PathLevel& level = fp.levels[static_cast<std::size_t>(l)];
    Orbits orbits(n);
    for (const Permutation& s : gens) orbits.add(s);
    std::vector<int> failed;
    for (int w : level.cell) {
      if (w == level.chosen || orbits.find(w) == orbits.find(level.chosen)) continue;
      if (std::any_of(failed.begin(), failed.end(), [&](int f) { return orbits.find(f) == orbits.find(w); }))
        continue;
      Partition p = level.part;
      const int s = p.individualize(w);
      std::optional<std::vector<int>> leaf;
      if (refine(g, p, {s}) == level.trace)
        leaf = descend(g, fp, static_cast<std::size_t>(l) + 1, p, accept);
      if (leaf) {
        gens.emplace_back(leaf_map(fp.leaf, *leaf));
        orbits.add(gens.back());
      } else {
        failed.push_back(w);
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

std::optional<std::vector<Vertex>> search_isomorphism(const SearchGraph& a, const SearchGraph& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::size_t arcs_a = 0, arcs_b = 0;
  for (const auto& row : a.out) arcs_a += row.size();
  for (const auto& row : b.out) arcs_b += row.size();
  if (arcs_a != arcs_b) return std::nullopt;
  if (a.order() == 0) return std::vector<Vertex>{};

  const FirstPath fp = first_path(a);
  Partition p(b.order());
  if (refine(b, p, {0}) != fp.root_trace) return std::nullopt;
  auto accept = [&](const std::vector<int>& leaf) { return preserves(a, b, leaf_map(fp.leaf, leaf)); };
  auto leaf = descend(b, fp, 0, p, accept);
  if (!leaf) return std::nullopt;
  return leaf_map(fp.leaf, *leaf);
}

}  // namespace

PermGroup automorphism_group(const Graph& g) { return search_automorphisms(search_graph(g)); }
PermGroup automorphism_group(const Digraph& d) { return search_automorphisms(search_graph(d)); }

std::optional<std::vector<Vertex>> digraph_isomorphic(const Digraph& a, const Digraph& b) {
  return search_isomorphism(search_graph(a), search_graph(b));
}

std::optional<std::vector<Vertex>> graph_isomorphic(const Graph& a, const Graph& b) {
  return search_isomorphism(search_graph(a), search_graph(b));
}

bool is_isomorphism(const Digraph& a, const Digraph& b, std::span<const Vertex> p) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count() || static_cast<int>(p.size()) != a.order())
    return false;
  std::vector<char> hit(p.size(), 0);
  for (Vertex v : p) {
    if (v < 0 || v >= b.order() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (const Edge& e : a.arcs())
    if (!b.has_arc(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) return false;
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

bool is_automorphism(const Digraph& d, const Permutation& p) {
  return p.degree() == d.order() && is_isomorphism(d, d, p.images());
}

int arc_transitivity(const Graph& g, const PermGroup& aut, int max_length) {
  if (g.order() == 0 || !aut.is_transitive()) return 0;
  int best = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::vector<ArcSeq> arcs = enumerate_arcs(g, len);
    if (arcs.empty()) break;
    Orbits orbits(static_cast<int>(arcs.size()));
    for (const Permutation& s : aut.generators()) {
      std::vector<int> images(arcs.size());
      ArcSeq image;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        image.vertices.clear();
        for (Vertex v : arcs[i].vertices) image.vertices.push_back(s[v]);
        images[i] = static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), image) - arcs.begin());
      }
      orbits.add(Permutation(std::move(images)));
    }
    bool single = true;
    for (int i = 0; i < static_cast<int>(arcs.size()) && single; ++i) single = orbits.find(i) == 0;
    if (!single) break;
    best = len;
  }
  return best;
}

int arc_transitivity(const Graph& g, int max_length) {
  return arc_transitivity(g, automorphism_group(g), max_length);
}

bool is_distance_transitive(const Graph& g, const PermGroup& aut) {
  const DistanceTable dt = distances(g);
  const int n = g.order();
  Orbits orbits(n * n);
  for (const Permutation& s : aut.generators()) {
    std::vector<int> images(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) images[static_cast<std::size_t>(u * n + v)] = s[u] * n + s[v];
    orbits.add(Permutation(std::move(images)));
  }
  // One orbit per distance value, and every orbit at a single distance.
  std::vector<int> root_of_distance(static_cast<std::size_t>(dt.diameter) + 1, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int d = dt.at(u, v);
      const int r = orbits.find(u * n + v);
      int& slot = root_of_distance[static_cast<std::size_t>(d)];
      if (slot == -1) slot = r;
      if (slot != r) return false;
    }
  std::vector<int> roots(root_of_distance);
  std::sort(roots.begin(), roots.end());
  return std::unique(roots.begin(), roots.end()) == roots.end();
}

bool is_distance_transitive(const Graph& g) { return is_distance_transitive(g, automorphism_group(g)); }

namespace {

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

// Smallest normal subgroup containing `seeds`, as a group on g's points.
PermGroup normal_closure(const PermGroup& g, std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  for (Permutation& s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  PermGroup n(g.degree(), gens);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i)
      for (const Permutation& x : g.generators()) {
        Permutation conj = x.inverse() * gens[i] * x;
        if (n.contains(conj)) continue;
        gens.push_back(std::move(conj));
        n = PermGroup(g.degree(), gens);
        grew = true;
        break;
      }
  }
  return n;
}

}  // namespace

std::vector<PermGroup> index_two_subgroups(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(gens[i] * gens[i]);
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  }
  const PermGroup n = normal_closure(g, seeds);
  std::vector<Permutation> n_gens = n.generators();

  // Generators independent modulo N form a basis of the elementary abelian
  // quotient G/N.
  std::vector<std::size_t> basis;
  {
    std::vector<Permutation> acc = n_gens;
    PermGroup h(g.degree(), acc);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (h.contains(gens[i])) continue;
      basis.push_back(i);
      acc.push_back(gens[i]);
      h = PermGroup(g.degree(), acc);
    }
  }
  const std::size_t m = basis.size();
  if (m == 0) return {};
  if (m > 20) throw std::runtime_error("index_two_subgroups: quotient too large");

  // Coordinates of every generator in that basis.
  std::vector<std::uint32_t> coords(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1U << m) && !found; ++mask) {
      Permutation x = gens[i];
      for (std::size_t b = 0; b < m; ++b)
        if (mask >> b & 1U) x = x * gens[basis[b]];
      if (n.contains(x)) {
        coords[i] = mask;
        found = true;
      }
    }
    if (!found) throw std::logic_error("index_two_subgroups: generator outside the span");
  }

  std::vector<PermGroup> out;
  for (std::uint32_t phi = 1; phi < (1U << m); ++phi) {
    std::vector<Permutation> kernel = n_gens;
    long pivot = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const bool odd = (__builtin_popcount(coords[i] & phi) & 1) != 0;
      if (!odd) {
        kernel.push_back(gens[i]);
      } else if (pivot < 0) {
        pivot = static_cast<long>(i);
      } else {
        kernel.push_back(gens[i] * gens[static_cast<std::size_t>(pivot)]);
      }
    }
    out.emplace_back(g.degree(), std::move(kernel));
  }
  return out;
}

std::optional<PermGroup> regular_subgroup(const PermGroup& g) {
  const auto points = static_cast<std::uint64_t>(g.degree());
  const std::uint64_t order = g.order();
  if (points == 0 || order % points != 0 || order / points > 2)
    throw std::invalid_argument("regular_subgroup: only index 1 or 2 is supported");
  if (order == points) {
    if (g.is_regular()) return g;
    return std::nullopt;
  }
  for (PermGroup& h : index_two_subgroups(g))
    if (h.order() == points && h.is_transitive()) return std::move(h);
  return std::nullopt;
}

}  // namespace cdt
