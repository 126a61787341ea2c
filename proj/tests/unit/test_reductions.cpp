#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "numlab/errors.hpp"
#include "numlab/fourcolor.hpp"
#include "numlab/godel.hpp"
#include "numlab/miu.hpp"
#include "oracles.hpp"
#include "program_corpus.hpp"

namespace numlab::reductions {
namespace {

using numlab::testing::read_fixture;

// ---------------------------------------------------------------- numbering

TEST(Godel, ZeroIsTheEmptyProgram) { EXPECT_TRUE(decode_program(0).empty()); }

TEST(Godel, AddRoundTripsUpToRenaming) {
  const auto add = machine::parse_program(read_fixture("add.prog"));
  const auto back = decode_program(encode_program(add));
  EXPECT_EQ(back, canonical_renaming(add));
  for (machine::Natural a = 0; a <= 4; ++a)
    for (machine::Natural b = 0; b <= 4; ++b) {
      const std::vector<machine::Natural> in{a, b};
      EXPECT_EQ(machine::run(back, in, 1000).output, a + b);
    }
}

TEST(Godel, CanonicalNames) {
  const auto p = machine::parse_program("top: INC tmp\nIFNZ X2 GOTO top\nDEC Y\nINC other\n");
  EXPECT_EQ(machine::render_program(canonical_renaming(p)), "L0: INC Z1\n    IFNZ X2 GOTO L0\n    DEC Y\n    INC Z2\n");
}

TEST(Godel, InjectiveOnCorpus) {
  const auto corpus = numlab::testing::program_corpus();
  ASSERT_EQ(corpus.size(), 50U);
  std::set<BigInt> codes;
  for (const auto& p : corpus) {
    const BigInt n = encode_program(p);
    EXPECT_TRUE(codes.insert(n).second) << machine::render_program(p);
    EXPECT_EQ(decode_program(n), canonical_renaming(p));
  }
}

TEST(Godel, EveryNumberDecodes) {
  for (unsigned n = 0; n < 3000; ++n) {
    const auto p = decode_program(n);
    // decoded names need not be canonical (Z3 may precede Z1), so the
    // roundtrip lands on the canonical representative and then stays there
    const BigInt m = encode_program(p);
    EXPECT_EQ(decode_program(m), canonical_renaming(p)) << n;
    EXPECT_EQ(encode_program(decode_program(m)), m) << n;
  }
}

// ---------------------------------------------------------------- MIU

TEST(MiuIndex, FirstSentences) {
  EXPECT_EQ(sentence_of_index(0).text(), "M");
  EXPECT_EQ(sentence_of_index(1).text(), "I");
  EXPECT_EQ(sentence_of_index(2).text(), "U");
  EXPECT_EQ(sentence_of_index(3).text(), "MM");
  EXPECT_EQ(sentence_of_index(4).text(), "MI");
  EXPECT_EQ(index_of_sentence(Sentence("MIU")), 17U);
}

TEST(MiuIndex, Bijective) {
  for (std::uint64_t n = 0; n < 10000; ++n) EXPECT_EQ(index_of_sentence(sentence_of_index(n)), n);
}

TEST(MiuIndex, Bounds) {
  EXPECT_THROW(Sentence(""), std::invalid_argument);
  EXPECT_THROW(Sentence("MIX"), std::invalid_argument);
  EXPECT_NO_THROW(index_of_sentence(Sentence(std::string(kMaxIndexedSentenceLength, 'U'))));
  // (3^41 - 3) / 2 is the first index of length 41
  EXPECT_EQ(index_of_sentence(Sentence(std::string(kMaxIndexedSentenceLength + 1, 'M'))), 18236498188585393200ULL);
  EXPECT_THROW(index_of_sentence(Sentence(std::string(kMaxIndexedSentenceLength + 1, 'U'))), std::overflow_error);
  EXPECT_THROW(index_of_sentence(Sentence(std::string(kMaxIndexedSentenceLength + 2, 'M'))), std::overflow_error);
  const auto last = sentence_of_index(~std::uint64_t{0});
  EXPECT_EQ(last.size(), kMaxIndexedSentenceLength + 1);
  EXPECT_EQ(index_of_sentence(last), ~std::uint64_t{0});
}

TEST(Miu, Successors) {
  auto texts = [](const std::vector<Sentence>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.text());
    return out;
  };
  EXPECT_EQ(texts(miu_successors(Sentence("MI"))), (std::vector<std::string>{"MII", "MIU"}));
  EXPECT_EQ(texts(miu_successors(Sentence("MIIII"))),
            (std::vector<std::string>{"MIIIIIIII", "MIIIIU", "MIU", "MUI"}));
  EXPECT_EQ(texts(miu_successors(Sentence("MUUU"))), (std::vector<std::string>{"MU", "MUUUUUU"}));
}

TEST(Miu, DepthZeroIsTheAxiom) {
  const auto c = miu_theorems(0);
  EXPECT_EQ(c.theorems.size(), 1U);
  EXPECT_TRUE(c.contains("MI"));
}

TEST(Miu, DepthOne) {
  const auto c = miu_theorems(1);
  EXPECT_TRUE(c.contains("MIU"));
  EXPECT_TRUE(c.contains("MII"));
  EXPECT_EQ(c.theorems.size(), 3U);
}

TEST(Miu, MuIsNotDerived) {
  const auto c = miu_theorems(8, 12);
  EXPECT_FALSE(c.contains("MU"));
  EXPECT_EQ(c.discovery_order.front().text(), "MI");
}

TEST(Miu, MatchesDirectRewriting) {
  for (std::size_t depth : {0U, 3U, 6U, 8U}) {
    const auto c = miu_theorems(depth, 12);
    std::set<std::string> lib;
    for (const auto& s : c.theorems) lib.insert(s.text());
    EXPECT_EQ(lib, oracle::miu_bfs(depth, 12)) << depth;
  }
}

TEST(Miu, EnumeratorIsFiniteAndComplete) {
  auto e = theorem_set_enumerator(8);
  const auto [items, status] = e.take(100000, 1000000);
  EXPECT_EQ(status, sets::PullStatus::Exhausted);
  std::set<std::string> got;
  for (auto n : items) got.insert(sentence_of_index(n).text());
  EXPECT_EQ(got.size(), items.size());
  EXPECT_EQ(got, oracle::miu_bfs(1000, 8));
  EXPECT_EQ(items.front(), index_of_sentence(Sentence("MI")));
}

// ---------------------------------------------------------------- four colours

TEST(Graph, Validation) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  const Graph g(3, {{2, 1}, {0, 2}});
  EXPECT_EQ(g.edges(), (std::vector<Graph::Edge>{{0, 2}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(Graph, TextFormat) {
  const Graph k4 = parse_graph(read_fixture("k4.graph"));
  EXPECT_EQ(k4, Graph::complete(4));
  EXPECT_EQ(parse_graph(render_graph(k4)), k4);
  EXPECT_EQ(parse_graph(read_fixture("k33.graph")), Graph::complete_bipartite(3, 3));
  try {
    parse_graph("3\n0 1\n0 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), 3U);
  }
}

TEST(Coloring, Examples) {
  const auto k4 = four_colorable(Graph::complete(4));
  ASSERT_TRUE(k4.has_value());
  std::set<int> used(k4->colors.begin(), k4->colors.end());
  EXPECT_EQ(used.size(), 4U);
  EXPECT_FALSE(four_colorable(Graph::complete(5)).has_value());
  const auto c5 = four_colorable(Graph::cycle(5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_TRUE(is_proper_coloring(Graph::cycle(5), *c5));
}

TEST(Coloring, ProperCheckRejectsBadInput) {
  EXPECT_FALSE(is_proper_coloring(Graph::complete(2), Coloring{{0, 0}}));
  EXPECT_FALSE(is_proper_coloring(Graph::complete(2), Coloring{{0}}));
  EXPECT_FALSE(is_proper_coloring(Graph::complete(2), Coloring{{0, 4}}));
}

TEST(Planarity, Examples) {
  EXPECT_FALSE(is_planar(Graph::complete(5)));
  EXPECT_FALSE(is_planar(Graph::complete_bipartite(3, 3)));
  EXPECT_TRUE(is_planar(Graph::complete(4)));
  EXPECT_THROW(is_planar(Graph(9, {})), GuardViolation);
}

TEST(Planarity, SubdivisionsAndDenseGraphs) {
  // K3,3 with one edge subdivided
  Graph sub(7, {{0, 3}, {0, 4}, {0, 6}, {6, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(is_planar(sub));
  // the octahedron is planar with 12 = 3n - 6 edges
  std::vector<Graph::Edge> oct;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (j != i + 3) oct.emplace_back(i, j);
  EXPECT_TRUE(is_planar(Graph(6, oct)));
  EXPECT_FALSE(is_planar(Graph::complete(8)));
}

TEST(Enumeration, LabeledCounts) {
  EXPECT_EQ(enumerate_planar_graphs(1).size(), 1U);
  EXPECT_EQ(enumerate_planar_graphs(3).size(), 8U);
  EXPECT_EQ(enumerate_planar_graphs(4).size(), 64U);
  // 2^10 minus K5 itself
  EXPECT_EQ(enumerate_planar_graphs(5).size(), 1023U);
  EXPECT_EQ(enumerate_planar_graphs(6).size(), oracle::count_planar_labeled(6));
  EXPECT_THROW(enumerate_planar_graphs(8), GuardViolation);
}

TEST(Enumeration, AscendingMaskOrder) {
  const auto gs = enumerate_planar_graphs(4);
  for (std::size_t i = 1; i < gs.size(); ++i) EXPECT_LT(graph_mask(gs[i - 1]), graph_mask(gs[i]));
  EXPECT_EQ(graph_of_mask(4, graph_mask(Graph::complete(4))), Graph::complete(4));
}

TEST(Enumeration, IsomorphismClasses) {
  // unlabeled planar graphs on n vertices: 1, 2, 4, 11, 33, 142
  const std::vector<std::size_t> expected{1, 2, 4, 11, 33, 142};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_planar_graphs(n, true).size(), expected[n - 1]) << n;
  EXPECT_THROW(enumerate_planar_graphs(7, true), GuardViolation);
}

TEST(Enumeration, CanonicalMaskIsInvariant) {
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph relabeled(4, {{2, 0}, {0, 3}, {3, 1}});
  EXPECT_EQ(canonical_mask(path), canonical_mask(relabeled));
  EXPECT_NE(canonical_mask(path), canonical_mask(Graph::cycle(4)));
}

TEST(FourColor, SmallP) {
  EXPECT_TRUE(p_of_n(1));
  EXPECT_TRUE(p_of_n(4));
  EXPECT_THROW(p_of_n(8), GuardViolation);
}

TEST(FourColor, NoCounterexamplesUpToSix) {
  auto e = fourcolor_counterexample_enumerator(6);
  const auto [items, status] = e.take(10, 100);
  EXPECT_TRUE(items.empty());
  EXPECT_EQ(status, sets::PullStatus::Exhausted);
  EXPECT_THROW(fourcolor_counterexample_enumerator(8), GuardViolation);
}

TEST(FourColor, EnumeratorBudgetCountsValuesOfN) {
  auto e = fourcolor_counterexample_enumerator(6);
  const auto r = e.pull(3);
  EXPECT_EQ(r.status, sets::PullStatus::BudgetExceeded);
  EXPECT_EQ(r.work, 3U);
}

}  // namespace
}  // namespace numlab::reductions
