#include <gtest/gtest.h>

#include <random>

#include "cdt/automorphism.hpp"
#include "cdt/catalog.hpp"
#include "support.hpp"

namespace cdt {
namespace {

using testing::brute_force_automorphisms;

class CatalogGroups : public ::testing::TestWithParam<CdtName> {};

TEST_P(CatalogGroups, OrderTransitivityAndGenerators) {
  const Graph g = build_cdt(GetParam()).graph;
  const CdtParameters p = cdt_parameters(GetParam());
  const PermGroup aut = automorphism_group(g);
  EXPECT_EQ(aut.order(), static_cast<std::uint64_t>(p.a));
  for (const Permutation& x : aut.generators()) EXPECT_TRUE(is_automorphism(g, x));
  EXPECT_EQ(arc_transitivity(g, aut), p.k);
  EXPECT_TRUE(is_distance_transitive(g, aut));
}

INSTANTIATE_TEST_SUITE_P(Catalog, CatalogGroups, ::testing::ValuesIn(kAllCdt), [](const auto& info) {
  std::string s(cdt_token(info.param));
  std::erase(s, '-');
  return s;
});

TEST(Automorphisms, SmallGraphsAgainstBruteForce) {
  const std::vector<Graph> graphs = {testing::cycle_graph(5), testing::complete_graph(5), testing::prism(3),
                                     testing::prism(4), Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}),
                                     Graph::build(6, {{0, 1}, {2, 3}}), Graph::build(2, {{0, 1}})};
  for (const Graph& g : graphs) EXPECT_EQ(static_cast<long>(automorphism_group(g).order()), brute_force_automorphisms(g));
}

TEST(Automorphisms, RandomCubicAgainstBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_cubic(8, rng);
    EXPECT_EQ(static_cast<long>(automorphism_group(g).order()), brute_force_automorphisms(g)) << trial;
  }
}

TEST(Automorphisms, DirectedCycle) {
  std::vector<Edge> arcs;
  for (int i = 0; i < 7; ++i) arcs.push_back({i, (i + 1) % 7});
  const PermGroup g = automorphism_group(Digraph::build(7, arcs));
  EXPECT_EQ(g.order(), 7u);
  EXPECT_TRUE(g.is_regular());
}

TEST(Automorphisms, PathIsNotVertexTransitive) {
  const Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(automorphism_group(p3).is_transitive());
  EXPECT_EQ(arc_transitivity(p3), 0);
}

TEST(DistanceTransitive, SmallCases) {
  EXPECT_TRUE(is_distance_transitive(Graph::build(2, {{0, 1}})));
  const Graph chorded = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  EXPECT_FALSE(is_distance_transitive(chorded));
  // the 3-prism is vertex-transitive but not distance-transitive
  EXPECT_FALSE(is_distance_transitive(testing::prism(3)));
}

TEST(Isomorphism, RelabelledGraphsMatch) {
  std::mt19937 rng(5);
  const Graph g = build_cdt(CdtName::Heawood).graph;
  std::vector<Vertex> p(14);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  const Graph h = testing::relabel(g, p);
  const auto iso = graph_isomorphic(g, h);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_isomorphism(Digraph::of(g), Digraph::of(h), *iso));
  EXPECT_FALSE(graph_isomorphic(g, build_cdt(CdtName::Coxeter).graph));
  EXPECT_FALSE(graph_isomorphic(build_cdt(CdtName::Pappus).graph, build_cdt(CdtName::Desargues).graph));
}

TEST(Isomorphism, SelfMapsToAutomorphism) {
  const Digraph d = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto iso = digraph_isomorphic(d, d);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_isomorphism(d, d, *iso));
}

TEST(Isomorphism, OrientationMatters) {
  const Digraph a = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  const Digraph b = Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(digraph_isomorphic(a, b));
}

TEST(Isomorphism, BadMappingsRejected) {
  const Digraph a = Digraph::build(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> swap{2, 1, 0};
  EXPECT_FALSE(is_isomorphism(a, a, swap));
  const std::vector<Vertex> short_map{0, 1};
  EXPECT_FALSE(is_isomorphism(a, a, short_map));
}

TEST(IndexTwo, SymmetricGroupHasOnlyAlternating) {
  const PermGroup s4(4, {Permutation::from_cycles(4, "(0,1,2,3)"), Permutation::from_cycles(4, "(0,1)")});
  const auto subs = index_two_subgroups(s4);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].order(), 12u);
  EXPECT_FALSE(subs[0].contains(Permutation::from_cycles(4, "(0,1)")));
}

TEST(IndexTwo, KleinFourHasThree) {
  const PermGroup v4(4, {Permutation::from_cycles(4, "(0,1)(2,3)"), Permutation::from_cycles(4, "(0,2)(1,3)")});
  const auto subs = index_two_subgroups(v4);
  EXPECT_EQ(subs.size(), 3u);
  for (const auto& h : subs) EXPECT_EQ(h.order(), 2u);
  EXPECT_TRUE(index_two_subgroups(PermGroup(3, {Permutation::from_cycles(3, "(0,1,2)")})).empty());
}

TEST(RegularSubgroup, Cases) {
  const PermGroup c5(5, {Permutation::from_cycles(5, "(0,1,2,3,4)")});
  const auto same = regular_subgroup(c5);
  ASSERT_TRUE(same);
  EXPECT_EQ(same->order(), 5u);
  // D4 on the square's corners: index 2, the rotations act regularly
  const PermGroup d4(4, {Permutation::from_cycles(4, "(0,1,2,3)"), Permutation::from_cycles(4, "(1,3)")});
  const auto r = regular_subgroup(d4);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->is_regular());
  EXPECT_EQ(r->order(), 4u);
  const PermGroup s4(4, {Permutation::from_cycles(4, "(0,1,2,3)"), Permutation::from_cycles(4, "(0,1)")});
  EXPECT_THROW(regular_subgroup(s4), std::invalid_argument);
}

}  // namespace
}  // namespace cdt
