#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "numlab/fourcolor.hpp"
#include "numlab/godel.hpp"
#include "numlab/miu.hpp"
#include "oracles.hpp"
#include "program_corpus.hpp"

namespace numlab::reductions {
namespace {

Graph random_graph(std::mt19937_64& gen, std::size_t n, unsigned density_percent) {
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gen() % 100 < density_percent) edges.emplace_back(i, j);
  return Graph(n, edges);
}

TEST(ColoringProperty, ReturnedColoringsAreProper) {
  auto gen = testing::rng(20);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(gen, 1 + gen() % 8, static_cast<unsigned>(gen() % 100));
    const auto c = four_colorable(g);
    EXPECT_EQ(c.has_value(), oracle::brute_four_colorable(g)) << render_graph(g);
    if (c) { EXPECT_TRUE(is_proper_coloring(g, *c)) << render_graph(g); }
  }
}

TEST(PlanarityProperty, AgreesWithBoyerMyrvold) {
  auto gen = testing::rng(21);
  for (int i = 0; i < 400; ++i) {
    const Graph g = random_graph(gen, 5 + gen() % 4, 30 + static_cast<unsigned>(gen() % 50));
    EXPECT_EQ(is_planar(g), oracle::boost_planar(g)) << render_graph(g);
  }
}

TEST(PlanarityProperty, MonotoneUnderEdgeDeletion) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      if (!is_planar(graph_of_mask(n, mask))) continue;
      for (std::size_t b = 0; b < pairs; ++b)
        if ((mask >> b) & 1U) { EXPECT_TRUE(is_planar(graph_of_mask(n, mask & ~(std::uint64_t{1} << b)))) << n << " " << mask; }
    }
  }
}

TEST(FourColorProperty, CounterexamplesEqualTheNegatedPredicate) {
  // emitted values of n are exactly those in the guard range where P(n) fails
  constexpr std::size_t max_n = 6;
  auto lib = fourcolor_counterexample_enumerator(max_n);
  const auto emitted = lib.take(100, 1000).first;
  std::vector<sets::Natural> expected;
  auto pred = sets::DecidablePredicate::native([](sets::Natural n) { return n >= 1 && n <= max_n && p_of_n(n); })
                  .negated();
  auto filtered = sets::enumerator_from_predicate(pred);
  for (const auto n : filtered.take(max_n + 1, max_n + 1).first)
    if (n >= 1 && n <= max_n) expected.push_back(n);
  EXPECT_EQ(emitted, expected);
}

TEST(GodelProperty, RoundTripOnCorpus) {
  for (const auto& p : testing::program_corpus()) {
    const auto back = decode_program(encode_program(p));
    EXPECT_EQ(back, canonical_renaming(p)) << machine::render_program(p);
    EXPECT_EQ(encode_program(back), encode_program(p));
  }
}

TEST(GodelProperty, RenamingPreservesBehaviour) {
  auto gen = testing::rng(22);
  for (const auto& p : testing::program_corpus()) {
    const auto q = canonical_renaming(p);
    for (int i = 0; i < 3; ++i) {
      const std::vector<sets::Natural> in{gen() % 4, gen() % 4};
      const auto a = machine::run(p, in, 300), b = machine::run(q, in, 300);
      EXPECT_EQ(a.status, b.status);
      EXPECT_EQ(a.output, b.output);
      EXPECT_EQ(a.final_state.steps, b.final_state.steps);
    }
  }
}

TEST(MiuProperty, ICountNeverDivisibleByThree) {
  const auto c = miu_theorems(8, 12);
  // breadth-first count from an independent script
  EXPECT_EQ(c.theorems.size(), 99U);
  for (const auto& s : c.theorems) {
    const auto i = std::count(s.text().begin(), s.text().end(), 'I');
    EXPECT_NE(i % 3, 0) << s.text();
    EXPECT_LE(s.size(), 12U);
  }
}

TEST(MiuProperty, RandomSentencesIndexRoundTrip) {
  auto gen = testing::rng(23);
  for (int i = 0; i < 1000; ++i) {
    std::string s(1 + gen() % 30, 'M');
    for (auto& ch : s) ch = "MIU"[gen() % 3];
    EXPECT_EQ(sentence_of_index(index_of_sentence(Sentence(s))).text(), s);
  }
}

}  // namespace
}  // namespace numlab::reductions
