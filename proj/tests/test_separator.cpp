#include <gtest/gtest.h>

#include "cdt/automorphism.hpp"
#include "cdt/catalog.hpp"
#include "cdt/io.hpp"
#include "cdt/separator.hpp"

namespace cdt {
namespace {

struct Built {
  CdtGraph cg;
  CycleSet cs;
  int k = 0;
  OrientationAssignment a;
  SeparatorDigraph s;
};

Built build(CdtName n, bool flip = false) {
  Built b;
  b.cg = build_cdt(n);
  b.cs = enumerate_girth_cycles(b.cg.graph);
  b.k = cdt_parameters(n).k;
  b.a = solve(build_constraints(b.cg.graph, b.cs, b.k)).assignment();
  if (flip)
    for (std::size_t i = 0; i < b.a.keep.size(); ++i) b.a.keep[i] = !b.a.keep[i];
  b.s = build_separator(b.cg.graph, b.cs, b.k, b.a);
  return b;
}

const std::vector<CdtName> kPositive = {CdtName::K4,        CdtName::K33,     CdtName::Q3,   CdtName::Dodecahedral,
                                        CdtName::Desargues, CdtName::Coxeter, CdtName::Tutte};

class Separators : public ::testing::TestWithParam<CdtName> {};

TEST_P(Separators, Structure) {
  const Built b = build(GetParam());
  const CdtParameters p = cdt_parameters(GetParam());
  const SeparatorDigraph& s = b.s;
  EXPECT_EQ(s.order(), 3 * p.n * (1 << (p.k - 2)));
  EXPECT_TRUE(std::is_sorted(s.vertices.begin(), s.vertices.end()));
  EXPECT_EQ(s.cycles.size(), static_cast<std::size_t>(p.eta));
  for (const auto& c : s.cycles) EXPECT_EQ(c.size(), static_cast<std::size_t>(p.g));
  for (int v = 0; v < s.order(); ++v) {
    const int t = s.transposition[static_cast<std::size_t>(v)];
    EXPECT_NE(t, v);
    EXPECT_EQ(s.transposition[static_cast<std::size_t>(t)], v);
    EXPECT_EQ(s.vertices[static_cast<std::size_t>(t)], s.vertices[static_cast<std::size_t>(v)].reversed());
    EXPECT_EQ(s.digraph.out(v).size(), 2u);
    EXPECT_EQ(s.digraph.in(v).size(), 2u);
    EXPECT_EQ(s.index_of(s.vertices[static_cast<std::size_t>(v)]), v);
  }
  const Graph u = underlying(s.digraph);
  EXPECT_TRUE(u.is_regular(3));
  EXPECT_TRUE(is_connected(u));
  EXPECT_EQ(u.edge_count(), static_cast<std::size_t>(p.eta * p.g + s.order() / 2));
}

TEST_P(Separators, CyclesReadBackAsTheOrientation) {
  // each A-orbit, read through the first vertex of every window, is one of
  // the oriented girth cycles
  const Built b = build(GetParam());
  const auto oriented = oriented_cycles(b.cs, b.a);
  std::set<std::vector<Vertex>> rotations;
  for (const auto& c : oriented)
    for (std::size_t r = 0; r < c.size(); ++r) {
      std::vector<Vertex> rot(c.begin() + static_cast<long>(r), c.end());
      rot.insert(rot.end(), c.begin(), c.begin() + static_cast<long>(r));
      rotations.insert(rot);
    }
  for (const auto& orbit : b.s.cycles) {
    std::vector<Vertex> walk;
    for (int v : orbit) walk.push_back(b.s.vertices[static_cast<std::size_t>(v)].vertices.front());
    EXPECT_TRUE(rotations.count(walk));
  }
}

TEST_P(Separators, CensusPartitionsVertices) {
  const Built b = build(GetParam());
  for (int r = 1; r <= 4; ++r) {
    const AlternateCensus c = alternate_census(b.s, r);
    EXPECT_EQ(c.r, r);
    std::vector<int> seen(static_cast<std::size_t>(b.s.order()), 0);
    std::size_t total = 0;
    for (const auto& w : c.walks) {
      EXPECT_EQ(w.walk.size() % static_cast<std::size_t>(r + 1), 0u);
      total += w.walk.size() / static_cast<std::size_t>(r + 1);
      for (std::size_t i = 0; i < w.walk.size(); i += static_cast<std::size_t>(r + 1))
        ++seen[static_cast<std::size_t>(w.walk[i])];
      std::set<int> distinct(w.walk.begin(), w.walk.end());
      EXPECT_EQ(w.simple, distinct.size() == w.walk.size());
    }
    EXPECT_EQ(total, static_cast<std::size_t>(b.s.order()));
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
  }
}

TEST_P(Separators, GlobalFlipGivesIsomorphicSeparator) {
  const Built b = build(GetParam());
  const Built f = build(GetParam(), true);
  const auto iso = digraph_isomorphic(b.s.digraph, f.s.digraph);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_isomorphism(b.s.digraph, f.s.digraph, *iso));
}

INSTANTIATE_TEST_SUITE_P(Positive, Separators, ::testing::ValuesIn(kPositive), [](const auto& info) {
  return std::string(cdt_token(info.param));
});

TEST(Separator, K4OrientedTriangles) {
  const Built b = build(CdtName::K4);
  std::set<std::vector<std::string>> cycles;
  for (const auto& orbit : b.s.cycles) {
    std::vector<std::string> names;
    for (int v : orbit) names.push_back(arc_label(b.s.vertices[static_cast<std::size_t>(v)], &b.cg.labels));
    auto least = std::min_element(names.begin(), names.end());
    std::rotate(names.begin(), least, names.end());
    cycles.insert(names);
  }
  // (12,23,31) and (21,10,02), or both reversed under the global flip
  const bool direct = cycles.count({"12", "23", "31"}) && cycles.count({"02", "21", "10"});
  const bool flipped = cycles.count({"13", "32", "21"}) && cycles.count({"01", "12", "20"});
  EXPECT_TRUE(direct || flipped);
}

TEST(Separator, AlternateLengthsByFamily) {
  for (CdtName n : kPositive) {
    const Built b = build(n);
    const AlternateCensus c = alternate_census(b.s, 1);
    const int expected = (n == CdtName::K4 || n == CdtName::Q3 || n == CdtName::Dodecahedral) ? 6 : 8;
    for (const auto& w : c.walks) {
      EXPECT_EQ(static_cast<int>(w.walk.size()), expected) << cdt_token(n);
      EXPECT_TRUE(w.simple);
    }
  }
}

TEST(Separator, TutteCensus) {
  const Built b = build(CdtName::Tutte);
  const auto censuses = alternate_censuses(b.s);
  ASSERT_EQ(censuses.size(), 4u);
  EXPECT_EQ(censuses[0].simple_lengths(), (std::map<int, int>{{8, 180}}));
  EXPECT_EQ(censuses[1].simple_lengths(), (std::map<int, int>{{12, 180}}));
  EXPECT_EQ(censuses[2].simple_lengths(), (std::map<int, int>{{32, 90}}));
  EXPECT_EQ(censuses[3].simple_lengths(), (std::map<int, int>{{15, 240}}));
}

TEST(Separator, Summaries) {
  const SeparatorSummary t = separator_summary(build(CdtName::Tutte).s);
  EXPECT_EQ(t.vertices, 720);
  EXPECT_EQ(t.cycle_arcs, 720);
  EXPECT_EQ(t.oriented_cycles, 90);
  EXPECT_EQ(t.transposition_edges, 360);
  EXPECT_EQ(t.underlying_edges, 1080);
  const SeparatorSummary c = separator_summary(build(CdtName::Coxeter).s);
  EXPECT_EQ(c.vertices, 168);
  EXPECT_EQ(c.transposition_edges, 84);
  EXPECT_EQ(c.underlying_edges, 252);
  EXPECT_EQ(c.censuses[0].simple_count(), 42u);
  const SeparatorSummary d = separator_summary(build(CdtName::Desargues).s);
  EXPECT_EQ(d.oriented_cycles, 20);
  EXPECT_EQ(d.censuses[0].simple_count(), 30u);
  EXPECT_EQ(d.transposition_edges, 60);
  const SeparatorSummary k = separator_summary(build(CdtName::K4).s);
  EXPECT_EQ(k.oriented_cycles, 4);
  EXPECT_EQ(k.censuses[0].simple_lengths(), (std::map<int, int>{{6, 4}}));
  const SeparatorSummary k33 = separator_summary(build(CdtName::K33).s);
  EXPECT_EQ(k33.oriented_cycles, 9);
  EXPECT_EQ(k33.censuses[0].simple_lengths(), (std::map<int, int>{{8, 9}}));
}

TEST(Separator, InvalidOrientationRejected) {
  Built b = build(CdtName::K4);
  b.a.keep[0] = !b.a.keep[0];
  EXPECT_THROW(build_separator(b.cg.graph, b.cs, b.k, b.a), PreconditionError);
}

}  // namespace
}  // namespace cdt
