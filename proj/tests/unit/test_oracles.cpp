#include <gtest/gtest.h>

// The oracles are trusted by the other suites, so they are pinned here
// against hand-checked values before anything is compared against them.

#include "numlab/dioph.hpp"
#include "oracles.hpp"
#include "printers.hpp"

namespace numlab::oracle {
namespace {

numbers::UniPolynomial P(const char* text) { return numbers::parse_unipoly(text); }

TEST(SplittingOracle, KnownDegrees) {
  EXPECT_EQ(splitting_degree(P("x - 1")).order, 1U);
  EXPECT_EQ(splitting_degree(P("x^2 - 5")).order, 2U);
  EXPECT_EQ(splitting_degree(P("x^3 - 2")).order, 6U);
  EXPECT_EQ(splitting_degree(P("x^3 - 3*x - 1")).order, 3U);
  EXPECT_EQ(splitting_degree(P("x^4 - 2")).order, 8U);
  EXPECT_EQ(splitting_degree(P("x^4 - x - 1")).order, 24U);
}

TEST(SplittingOracle, SeparatesTheOrderFourGroups) {
  const auto v4 = splitting_degree(P("x^4 + 1"));
  EXPECT_EQ(v4.order, 4U);
  EXPECT_TRUE(v4.abelian);
  EXPECT_FALSE(v4.cyclic);
  const auto c4 = splitting_degree(P("x^4 + x^3 + x^2 + x + 1"));
  EXPECT_EQ(c4.order, 4U);
  EXPECT_TRUE(c4.cyclic);
}

TEST(KroneckerOracle, Factors) {
  EXPECT_EQ(kronecker_factor(P("x^4 - 1")), (std::vector<numbers::UniPolynomial>{P("x - 1"), P("x + 1"), P("x^2 + 1")}));
  EXPECT_EQ(kronecker_factor(P("x^4 + 4")), (std::vector<numbers::UniPolynomial>{P("x^2 - 2*x + 2"), P("x^2 + 2*x + 2")}));
  EXPECT_EQ(kronecker_factor(P("x^4 - x - 1")).size(), 1U);
}

TEST(BoxOracle, LeastWitness) {
  const dioph::DiophantineFamily comp(dioph::poly_parse("t - (x+2)*(y+2)"));
  EXPECT_EQ(box_solve(comp, 12, 10), (std::vector<std::uint64_t>{0, 4}));
  EXPECT_FALSE(box_solve(comp, 7, 10).has_value());
}

TEST(GraphOracles, SmallCases) {
  EXPECT_FALSE(boost_planar(reductions::Graph::complete(5)));
  EXPECT_TRUE(boost_planar(reductions::Graph::complete(4)));
  EXPECT_TRUE(brute_four_colorable(reductions::Graph::complete(4)));
  EXPECT_FALSE(brute_four_colorable(reductions::Graph::complete(5)));
  EXPECT_EQ(count_planar_labeled(4), 64U);
  EXPECT_EQ(count_planar_labeled(5), 1023U);
}

TEST(MinorsOracle, Values) {
  EXPECT_EQ(invariant_factors_by_minors(topo::IntegerMatrix{{2, 4}, {6, 8}}), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(invariant_factors_by_minors(topo::IntegerMatrix{{2, 0}, {0, 3}}), (std::vector<BigInt>{1, 6}));
  EXPECT_TRUE(invariant_factors_by_minors(topo::IntegerMatrix(3, 2)).empty());
}

TEST(BettiOracle, Spheres) {
  EXPECT_EQ(betti_over_q(topo::simplex_boundary(3)), (std::vector<std::size_t>{1, 0, 1, 0}));
  EXPECT_EQ(betti_over_q(topo::simplex_boundary(4)), (std::vector<std::size_t>{1, 0, 0, 1}));
}

TEST(MiuOracle, FirstLayers) {
  EXPECT_EQ(miu_bfs(0, 12), (std::set<std::string>{"MI"}));
  EXPECT_EQ(miu_bfs(1, 12), (std::set<std::string>{"MI", "MII", "MIU"}));
  EXPECT_EQ(miu_bfs(2, 12), (std::set<std::string>{"MI", "MII", "MIU", "MIIII", "MIIU", "MIUIU"}));
}

}  // namespace
}  // namespace numlab::oracle
