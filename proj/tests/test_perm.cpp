#include <gtest/gtest.h>

#include "cdt/perm.hpp"

namespace cdt {
namespace {

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 2}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation(std::vector<int>{}));
}

TEST(Permutation, ProductIsLeftToRight) {
  const Permutation p({1, 2, 0});  // 0->1->2->0
  const Permutation q({1, 0, 2});  // swap 0 1
  const Permutation pq = p * q;
  for (int x = 0; x < 3; ++x) EXPECT_EQ(pq[x], q[p[x]]);
  EXPECT_EQ(p * p.inverse(), Permutation::identity(3));
}

TEST(Permutation, CycleNotation) {
  const Permutation a = Permutation::from_cycles(6, "(0,5,4,1)(2,3)");
  EXPECT_EQ(a[0], 5);
  EXPECT_EQ(a[1], 0);
  EXPECT_EQ(a[2], 3);
  EXPECT_EQ(a.order(), 4);
  EXPECT_EQ(a.to_cycles(), "(0,5,4,1)(2,3)");
  const Permutation b = Permutation::from_cycles(4, "(12)(34)", 1);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[2], 3);
  EXPECT_EQ(b.order(), 2);
  EXPECT_EQ(Permutation::identity(3).to_cycles(), "()");
  EXPECT_THROW(Permutation::from_cycles(3, "(0,0)"), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(3, "(0,3)"), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(3, "(0,1"), std::invalid_argument);
}

TEST(Permutation, FirstMoved) {
  EXPECT_EQ(Permutation::identity(4).first_moved(), -1);
  EXPECT_EQ(Permutation::from_cycles(4, "(2,3)").first_moved(), 2);
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TEST(PermGroup, SymmetricGroups) {
  for (int n = 1; n <= 9; ++n) {
    std::vector<Permutation> gens;
    if (n > 1) {
      std::vector<int> cyc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
      gens.emplace_back(cyc);
      std::vector<int> swap(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) swap[static_cast<std::size_t>(i)] = i;
      std::swap(swap[0], swap[1]);
      gens.emplace_back(swap);
    }
    const PermGroup g(n, gens);
    EXPECT_EQ(g.order(), static_cast<std::uint64_t>(factorial(n))) << n;
  }
}

TEST(PermGroup, OrderAgreesWithClosure) {
  // Schreier-Sims against brute-force closure on assorted groups
  const std::vector<std::pair<int, std::vector<std::string_view>>> cases = {
      {5, {"(0,1,2)", "(2,3,4)"}},                  // A5
      {6, {"(0,1,2,3,4,5)", "(1,5)(2,4)"}},         // D6
      {8, {"(0,1)(2,3)(4,5)(6,7)", "(0,2)(1,3)"}},  // Klein-ish
      {7, {"(0,1,2,3,4,5,6)", "(1,2,4)(3,6,5)"}},   // order 21
      {6, {"(0,5,4,1)(2,3)", "(0,2)(1,5)"}},
  };
  for (const auto& [n, texts] : cases) {
    std::vector<Permutation> gens;
    for (auto t : texts) gens.push_back(Permutation::from_cycles(n, t));
    const PermGroup g(n, gens);
    const auto closure = generate_elements(n, gens);
    EXPECT_EQ(g.order(), closure.size());
    std::size_t product = 1;
    for (std::size_t s : g.transversal_sizes()) product *= s;
    EXPECT_EQ(product, g.order());
    for (const Permutation& p : closure) EXPECT_TRUE(g.contains(p));
    auto els = g.elements();
    auto sorted = closure;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(els, sorted);
  }
}

TEST(PermGroup, Membership) {
  const PermGroup a5(5, {Permutation::from_cycles(5, "(0,1,2)"), Permutation::from_cycles(5, "(2,3,4)")});
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_TRUE(a5.contains(Permutation::from_cycles(5, "(0,1)(2,3)")));
  EXPECT_FALSE(a5.contains(Permutation::from_cycles(5, "(0,1)")));
  EXPECT_FALSE(a5.contains(Permutation::identity(4)));
  EXPECT_EQ(a5.order_spectrum(), (std::set<int>{1, 2, 3, 5}));
}

TEST(PermGroup, OrbitsAndTransitivity) {
  const PermGroup g(5, {Permutation::from_cycles(5, "(0,1)"), Permutation::from_cycles(5, "(2,3,4)")});
  EXPECT_EQ(g.orbits(), (std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}}));
  EXPECT_FALSE(g.is_transitive());
  EXPECT_EQ(orbits_of(5, g.generators()), g.orbits());
  const PermGroup c5(5, {Permutation::from_cycles(5, "(0,1,2,3,4)")});
  EXPECT_TRUE(c5.is_regular());
  const PermGroup s3(3, {Permutation::from_cycles(3, "(0,1,2)"), Permutation::from_cycles(3, "(0,1)")});
  EXPECT_TRUE(s3.is_transitive());
  EXPECT_FALSE(s3.is_regular());
  EXPECT_TRUE(PermGroup(1, {}).is_transitive());
}

TEST(PermGroup, TrivialGroup) {
  const PermGroup g(4, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.base().empty());
  EXPECT_EQ(g.elements().size(), 1u);
}

TEST(PermGroup, DegreeMismatchThrows) {
  EXPECT_THROW(PermGroup(3, {Permutation::identity(4)}), std::invalid_argument);
}

}  // namespace
}  // namespace cdt
