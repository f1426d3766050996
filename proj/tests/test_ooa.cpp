#include <gtest/gtest.h>

#include "cdt/catalog.hpp"
#include "cdt/cycles.hpp"
#include "cdt/ooa.hpp"
#include "support.hpp"

namespace cdt {
namespace {

struct Instance {
  Graph g;
  CycleSet cs;
  int k = 0;
  ParityConstraintGraph pcg;
};

Instance setup(CdtName n) {
  Instance s;
  s.g = build_cdt(n).graph;
  s.cs = enumerate_girth_cycles(s.g);
  s.k = cdt_parameters(n).k;
  s.pcg = build_constraints(s.g, s.cs, s.k);
  return s;
}

const std::set<CdtName> kPositive = {CdtName::K4,        CdtName::K33,     CdtName::Q3,   CdtName::Dodecahedral,
                                     CdtName::Desargues, CdtName::Coxeter, CdtName::Tutte};

TEST(Constraints, SizesMatchPathCounts) {
  // one constraint per unordered (k-1)-path: 3n 2^(k-2) / 2
  for (CdtName n : kAllCdt) {
    const Instance s = setup(n);
    const CdtParameters p = cdt_parameters(n);
    EXPECT_EQ(s.pcg.nodes, p.eta);
    EXPECT_EQ(static_cast<long>(s.pcg.constraints.size()), 3L * p.n * (1L << (p.k - 2)) / 2) << cdt_token(n);
  }
  EXPECT_EQ(setup(CdtName::K4).pcg.constraints.size(), 6u);
  EXPECT_EQ(setup(CdtName::K33).pcg.constraints.size(), 18u);
  EXPECT_EQ(setup(CdtName::Petersen).pcg.constraints.size(), 30u);
}

TEST(Constraints, ParityFollowsDirections) {
  const Instance s = setup(CdtName::Heawood);
  for (const auto& c : s.pcg.constraints) {
    const auto t = cycles_through(s.cs, c.path);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(c.parity == Parity::unequal, t[0].forward == t[1].forward);
  }
}

TEST(Constraints, RejectsGraphsWithoutDoubleCover) {
  const Graph c6 = testing::cycle_graph(6);
  EXPECT_THROW(build_constraints(c6, enumerate_girth_cycles(c6), 2), PreconditionError);
  const Graph p4 = testing::prism(4);
  EXPECT_THROW(build_constraints(p4, enumerate_girth_cycles(p4), 3), PreconditionError);
}

class Split : public ::testing::TestWithParam<CdtName> {};

TEST_P(Split, SolvedExactlyOnPositiveGraphs) {
  const Instance s = setup(GetParam());
  const SolveResult r = solve(s.pcg);
  ASSERT_EQ(r.solved(), kPositive.count(GetParam()) == 1);
  if (r.solved()) {
    EXPECT_TRUE(satisfies(s.pcg, r.assignment()));
    EXPECT_TRUE(verify_ooa(s.g, s.cs, s.k, r.assignment()));
    EXPECT_TRUE(r.assignment().keep.front());  // representative keeps its direction
  } else {
    const OddWitness& w = r.witness();
    EXPECT_TRUE(validate_witness(s.pcg, w));
    EXPECT_EQ(w.cycles.front(), w.cycles.back());
    EXPECT_EQ(w.cycles.size(), w.constraints.size() + 1);
  }
}

TEST_P(Split, FixtureIsASolution) {
  const auto fixture = reference_ooc(GetParam());
  ASSERT_EQ(fixture.has_value(), kPositive.count(GetParam()) == 1);
  if (!fixture) return;
  const Instance s = setup(GetParam());
  const PartialAssignment partial = assignment_from_cycles(s.cs, fixture->cycles);
  const auto full = complete_assignment(s.pcg, partial);
  ASSERT_TRUE(full.has_value());
  EXPECT_TRUE(verify_ooa(s.g, s.cs, s.k, *full));
  for (std::size_t c = 0; c < partial.keep.size(); ++c)
    if (partial.keep[c]) EXPECT_EQ(*partial.keep[c], full->keep[c]);
}

INSTANTIATE_TEST_SUITE_P(Catalog, Split, ::testing::ValuesIn(kAllCdt), [](const auto& info) {
  std::string s(cdt_token(info.param));
  std::erase(s, '-');
  return s;
});

TEST(Solve, EmptyConstraintGraph) {
  const SolveResult r = solve(ParityConstraintGraph{});
  ASSERT_TRUE(r.solved());
  EXPECT_TRUE(r.assignment().keep.empty());
  EXPECT_EQ(r.components, 0);
}

TEST(Solve, TriangleOfUnequalIsOdd) {
  ParityConstraintGraph pcg;
  pcg.nodes = 3;
  pcg.constraints = {{0, 1, Parity::unequal, {}}, {1, 2, Parity::unequal, {}}, {2, 0, Parity::unequal, {}}};
  const SolveResult r = solve(pcg);
  ASSERT_FALSE(r.solved());
  EXPECT_EQ(r.witness().constraints.size(), 3u);
  EXPECT_TRUE(validate_witness(pcg, r.witness()));
}

TEST(Solve, ParallelEdgesWithDifferentLabels) {
  ParityConstraintGraph pcg;
  pcg.nodes = 2;
  pcg.constraints = {{0, 1, Parity::equal, {}}, {0, 1, Parity::unequal, {}}};
  const SolveResult r = solve(pcg);
  ASSERT_FALSE(r.solved());
  EXPECT_EQ(r.witness().constraints.size(), 2u);
}

TEST(Solve, ComponentsCounted) {
  ParityConstraintGraph pcg;
  pcg.nodes = 4;
  pcg.constraints = {{0, 1, Parity::unequal, {}}, {2, 3, Parity::equal, {}}};
  const SolveResult r = solve(pcg);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.components, 2);
  EXPECT_EQ(r.assignment().keep, (std::vector<bool>{true, false, true, true}));
}

TEST(Witness, TamperedWitnessFails) {
  const Instance s = setup(CdtName::Petersen);
  OddWitness w = solve(s.pcg).witness();
  ASSERT_TRUE(validate_witness(s.pcg, w));
  OddWitness shorter = w;
  shorter.constraints.pop_back();
  EXPECT_FALSE(validate_witness(s.pcg, shorter));
  OddWitness other = w;
  other.cycles[1] = (other.cycles[1] + 1) % s.pcg.nodes;
  EXPECT_FALSE(validate_witness(s.pcg, other));
}

TEST(Verify, FlippingOneK4CycleBreaksIt) {
  const Instance s = setup(CdtName::K4);
  OrientationAssignment a = solve(s.pcg).assignment();
  ASSERT_TRUE(verify_ooa(s.g, s.cs, s.k, a));
  a.keep[0] = !a.keep[0];
  EXPECT_FALSE(verify_ooa(s.g, s.cs, s.k, a));
  EXPECT_FALSE(satisfies(s.pcg, a));
}

TEST(Verify, WrongSizeAssignmentFails) {
  const Instance s = setup(CdtName::K4);
  EXPECT_FALSE(verify_ooa(s.g, s.cs, s.k, OrientationAssignment{{true}}));
}

TEST(Fixtures, K4MatchesSolverUpToFlip) {
  const Instance s = setup(CdtName::K4);
  const auto full = complete_assignment(s.pcg, assignment_from_cycles(s.cs, reference_ooc(CdtName::K4)->cycles));
  const auto solved = solve(s.pcg).assignment();
  OrientationAssignment flipped = solved;
  for (std::size_t i = 0; i < flipped.keep.size(); ++i) flipped.keep[i] = !flipped.keep[i];
  EXPECT_TRUE(*full == solved || *full == flipped);
}

TEST(Fixtures, NotAGirthCycleThrows) {
  const Instance s = setup(CdtName::K4);
  EXPECT_THROW(assignment_from_cycles(s.cs, {{0, 1, 2, 3}}), GraphError);
}

TEST(Fixtures, ContradictoryPartialIsRejected) {
  const Instance s = setup(CdtName::K4);
  const auto a = solve(s.pcg).assignment();
  PartialAssignment p;
  p.keep.assign(a.keep.size(), std::nullopt);
  p.keep[0] = a.keep[0];
  p.keep[1] = !a.keep[1];
  EXPECT_FALSE(complete_assignment(s.pcg, p).has_value());
}

TEST(Kappa, Rule) {
  EXPECT_EQ(classify_kappa(true, false, 6, 3), 3);   // Desargues
  EXPECT_EQ(classify_kappa(true, false, 8, 5), 2);   // Tutte
  EXPECT_EQ(classify_kappa(false, false, 6, 3), 0);  // Pappus
  EXPECT_EQ(classify_kappa(true, true, 3, 2), 1);    // K4
  EXPECT_THROW(classify_kappa(false, true, 5, 3), KappaError);
  EXPECT_THROW(classify_kappa(true, false, 3, 3), KappaError);
}

TEST(Kappa, MatchesTableForEveryGraph) {
  for (CdtName n : kAllCdt) {
    const Instance s = setup(n);
    EXPECT_EQ(classify_kappa(solve(s.pcg).solved(), is_planar(s.g), s.cs.girth(), s.k), cdt_parameters(n).kappa)
        << cdt_token(n);
  }
}

}  // namespace
}  // namespace cdt
