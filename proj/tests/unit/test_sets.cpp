#include <gtest/gtest.h>

#include "numlab/sets.hpp"

namespace numlab::sets {
namespace {

TEST(Pair, Values) {
  EXPECT_EQ(pair(Natural{0}, Natural{0}), 0U);
  EXPECT_EQ(pair(Natural{2}, Natural{1}), 7U);
  EXPECT_EQ(pair(Natural{1}, Natural{2}), 8U);
}

TEST(Pair, Unpair) {
  EXPECT_EQ(unpair(Natural{0}), std::make_pair(Natural{0}, Natural{0}));
  EXPECT_EQ(unpair(Natural{7}), std::make_pair(Natural{2}, Natural{1}));
}

TEST(Pair, WordOverflowIsReported) {
  EXPECT_THROW(pair(Natural{1} << 33, Natural{1} << 33), std::overflow_error);
}

TEST(Pair, BigVariantAgreesAndExceedsWords) {
  const BigInt x = BigInt(1) << 70, y = 5;
  const BigInt n = pair(x, y);
  EXPECT_EQ(unpair(n), std::make_pair(x, y));
  EXPECT_EQ(pair(BigInt(2), BigInt(1)), 7);
}

TEST(Pair, UnpairNearTheTopOfTheWord) {
  const Natural n = ~Natural{0};
  const auto [x, y] = unpair(n);
  EXPECT_EQ(pair(BigInt(from_u64(x)), BigInt(from_u64(y))), from_u64(n));
}

TEST(Tuple, Conventions) {
  const std::vector<Natural> five{5}, two_one{2, 1}, one_two_three{1, 2, 3};
  EXPECT_EQ(tuple_encode(five), 5U);
  EXPECT_EQ(tuple_encode(two_one), 7U);
  EXPECT_EQ(tuple_encode(std::span<const Natural>{}), 0U);
  EXPECT_EQ(tuple_decode(tuple_encode(one_two_three), 3), one_two_three);
  EXPECT_THROW(tuple_decode(Natural{3}, 0), std::invalid_argument);
}

TEST(Tuple, BigRoundTrip) {
  const std::vector<BigInt> xs{BigInt(1) << 40, 0, 17, BigInt(1) << 65};
  EXPECT_EQ(tuple_decode(tuple_encode(xs), xs.size()), xs);
}

TEST(Predicate, EvensInOrder) {
  auto e = enumerator_from_predicate(DecidablePredicate::native([](Natural n) { return n % 2 == 0; }));
  const auto [items, status] = e.take(4, 100);
  EXPECT_EQ(items, (std::vector<Natural>{0, 2, 4, 6}));
  EXPECT_EQ(status, PullStatus::Item);
}

TEST(Predicate, FirstPrimes) {
  auto e = enumerator_from_predicate(DecidablePredicate::native(is_prime));
  EXPECT_EQ(e.take(5, 1000).first, (std::vector<Natural>{2, 3, 5, 7, 11}));
}

TEST(Predicate, EmptySetExceedsBudget) {
  auto e = enumerator_from_predicate(DecidablePredicate::native([](Natural) { return false; }));
  const PullResult r = e.pull(1000);
  EXPECT_EQ(r.status, PullStatus::BudgetExceeded);
  EXPECT_EQ(r.work, 1000U);
}

TEST(Predicate, BudgetIsResumable) {
  auto e = enumerator_from_predicate(DecidablePredicate::native(is_prime));
  // 0..3 need four candidate tests to reach 3; budget 2 stops early
  EXPECT_EQ(e.pull(2).status, PullStatus::BudgetExceeded);
  const PullResult r = e.pull(10);
  ASSERT_TRUE(r.has_item());
  EXPECT_EQ(r.item, 2U);
}

TEST(Predicate, ProgramDeciderFailureIsDistinct) {
  // accepts 0, diverges on everything else
  const auto prog = machine::parse_program("INC ONE\nIFNZ X1 GOTO L\nINC Y\nIFNZ ONE GOTO E\nL: IFNZ ONE GOTO L\n");
  auto e = enumerator_from_predicate(DecidablePredicate::from_program(prog, 200));
  const auto first = e.pull(10);
  ASSERT_TRUE(first.has_item());
  EXPECT_EQ(first.item, 0U);
  const auto second = e.pull(10);
  EXPECT_EQ(second.status, PullStatus::DeciderFailure);
  EXPECT_FALSE(second.error.empty());
}

TEST(Predicate, NegationFlipsVerdicts) {
  const auto p = DecidablePredicate::native(is_square, "square").negated();
  EXPECT_EQ(p.decide(4), std::optional<bool>(false));
  EXPECT_EQ(p.decide(5), std::optional<bool>(true));
}

TEST(Dovetail, UnaryIsIdentity) {
  auto e = dovetail_tuples(1);
  EXPECT_EQ(e.take(4, 100).first, (std::vector<Natural>{0, 1, 2, 3}));
}

TEST(Dovetail, PairsFollowTheFormula) {
  auto e = dovetail_tuples(2);
  const auto items = e.take(3, 100).first;
  ASSERT_EQ(items.size(), 3U);
  EXPECT_EQ(tuple_decode(items[0], 2), (std::vector<Natural>{0, 0}));
  EXPECT_EQ(tuple_decode(items[1], 2), (std::vector<Natural>{1, 0}));
  EXPECT_EQ(tuple_decode(items[2], 2), (std::vector<Natural>{0, 1}));
}

TEST(Dovetail, FixedTupleAppearsInTime) {
  for (Natural a = 0; a <= 20; ++a)
    for (Natural b = 0; b <= 20; ++b) {
      auto e = dovetail_tuples(2);
      const Natural target = pair(a, b);
      EXPECT_EQ(member_semidecide(e, target, target + 1), Membership::Found);
    }
}

TEST(Semidecide, PrimesAndComposites) {
  auto primes = [] { return enumerator_from_predicate(DecidablePredicate::native(is_prime)); };
  auto e1 = primes();
  EXPECT_EQ(member_semidecide(e1, 7, 1000), Membership::Found);
  auto e2 = primes();
  EXPECT_EQ(member_semidecide(e2, 8, 1000), Membership::NotFoundWithinBudget);
  auto e3 = primes();
  EXPECT_EQ(member_semidecide(e3, 2, 0), Membership::NotFoundWithinBudget);
}

TEST(Semidecide, FiniteEnumeratorExhausts) {
  auto e = enumerator_from_sequence({3, 1, 4});
  EXPECT_EQ(member_semidecide(e, 5, 100), Membership::ExhaustedWithoutFinding);
  EXPECT_TRUE(e.exhausted());
  EXPECT_EQ(e.pull(10).status, PullStatus::Exhausted);
}

TEST(ReferencePredicates, SmallValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_composite(1));
  EXPECT_TRUE(is_composite(4));
  EXPECT_TRUE(is_square(0));
  EXPECT_TRUE(is_square(144));
  EXPECT_FALSE(is_square(145));
  EXPECT_TRUE(is_square(Natural{4294967295ULL} * 4294967295ULL));
}

}  // namespace
}  // namespace numlab::sets
