#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "printers.hpp"
#include "numlab/errors.hpp"
#include "numlab/numbers/cyclotomic.hpp"
#include "numlab/numbers/factor.hpp"
#include "numlab/numbers/galois.hpp"
#include "oracles.hpp"

namespace numlab::numbers {
namespace {

// gmpxx leaves num/den pairs unreduced
Rational fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

UniPolynomial random_poly(std::mt19937_64& gen, int degree, long span) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = static_cast<long>(gen() % (2 * span + 1)) - span;
  c.back() = 1 + static_cast<long>(gen() % 3);
  return UniPolynomial(c);
}

TEST(FactorProperty, ProductReconstructsAndMatchesKronecker) {
  auto gen = testing::rng(30);
  for (int i = 0; i < 80; ++i) {
    // products of two random factors, so reducible inputs are common
    const UniPolynomial p = random_poly(gen, 1 + static_cast<int>(gen() % 4), 6) *
                            random_poly(gen, 1 + static_cast<int>(gen() % 4), 6);
    const auto f = factor_integer_poly(p);
    EXPECT_EQ(f.product(), p) << render(p);
    EXPECT_EQ(f.factors, oracle::kronecker_factor(content_primitive(p).primitive)) << render(p);
    for (const auto& q : f.factors) EXPECT_TRUE(is_irreducible(q)) << render(q);
  }
}

TEST(FactorProperty, ScalingKeepsThePattern) {
  auto gen = testing::rng(31);
  for (int i = 0; i < 40; ++i) {
    const UniPolynomial p = random_poly(gen, 2 + static_cast<int>(gen() % 5), 8);
    long num = static_cast<long>(gen() % 9) - 4;
    if (num == 0) num = 7;
    const Rational k = fraction(num, 1 + static_cast<long>(gen() % 5));
    EXPECT_EQ(factor_integer_poly(p * k).factors, factor_integer_poly(p).factors) << render(p);
  }
}

TEST(GaloisProperty, RandomIrreduciblesMatchTheSplittingOracle) {
  auto gen = testing::rng(32);
  int checked = 0;
  while (checked < 40) {
    const UniPolynomial p = random_poly(gen, 2 + static_cast<int>(gen() % 3), 5);
    if (!is_irreducible(p)) continue;
    ++checked;
    const auto lib = galois_group(p);
    const auto ref = oracle::splitting_degree(p);
    EXPECT_EQ(lib.order, ref.order) << render(p);
    EXPECT_EQ(lib.abelian, ref.abelian) << render(p);
    // the square-discriminant side is exactly C3 / A4 / V4 / C1
    const bool square = is_rational_square(discriminant(p));
    const bool even_side = lib.group == GroupName::C3 || lib.group == GroupName::A4 || lib.group == GroupName::V4;
    if (p.degree() >= 3) { EXPECT_EQ(square, even_side) << render(p); }
  }
}

TEST(GaloisProperty, ScalingAndNegationKeepTheProfile) {
  const std::vector<const char*> polys{"x^2 - 5", "x^3 - 2", "x^3 - 3*x - 1", "x^4 + 1", "x^4 - 2",
                                       "x^4 + x^3 + x^2 + x + 1", "x^4 - x - 1", "x^4 + 8*x + 12"};
  for (const char* s : polys) {
    const UniPolynomial p = parse_unipoly(s);
    const auto base = galois_group(p);
    for (const Rational& k : {Rational(-1), Rational(3), Rational(2, 7), Rational(-5, 3)})
      EXPECT_EQ(galois_group(p * k), base) << s << " * " << k;
  }
}

TEST(GaussProperty, SquaresForAllOddPrimesToOneHundred) {
  for (unsigned p = 3; p <= kMaxGaussPrime; p += 2) {
    bool prime = true;
    for (unsigned d = 3; d * d <= p; d += 2) prime = prime && p % d != 0;
    if (!prime) {
      EXPECT_THROW(quadratic_gauss_sum(p), DomainError) << p;
      continue;
    }
    const auto g = quadratic_gauss_sum(p);
    const long expected = p % 4 == 1 ? static_cast<long>(p) : -static_cast<long>(p);
    EXPECT_EQ(cyc_multiply(g, g), CyclotomicElement::embed_rational(p, expected)) << p;
  }
}

TEST(GaussProperty, NumericValuesWithinTheReportedBound) {
  for (unsigned p : {3U, 5U, 7U, 11U, 13U, 17U, 29U, 97U}) {
    const auto v = numeric_eval(quadratic_gauss_sum(p), 30);
    const double root = std::sqrt(static_cast<double>(p));
    // g = sqrt(p) or i sqrt(p); the double comparison adds its own rounding slack
    const double slack = v.bound_approx + 1e-12;
    if (p % 4 == 1) {
      EXPECT_NEAR(v.real_approx, root, slack) << p;
      EXPECT_NEAR(v.imag_approx, 0.0, slack) << p;
    } else {
      EXPECT_NEAR(v.real_approx, 0.0, slack) << p;
      EXPECT_NEAR(v.imag_approx, root, slack) << p;
    }
  }
}

TEST(CyclotomicProperty, RingLawsOnRandomElements) {
  auto gen = testing::rng(33);
  for (unsigned n : {3U, 5U, 8U, 12U, 15U}) {
    auto rand_elem = [&] {
      std::vector<Rational> c(euler_phi(n));
      for (auto& x : c) x = fraction(static_cast<long>(gen() % 11) - 5, 1 + static_cast<long>(gen() % 3));
      return CyclotomicElement(n, c);
    };
    for (int i = 0; i < 10; ++i) {
      const auto a = rand_elem(), b = rand_elem(), c = rand_elem();
      EXPECT_EQ(cyc_multiply(a, cyc_add(b, c)), cyc_add(cyc_multiply(a, b), cyc_multiply(a, c)));
      EXPECT_EQ(cyc_multiply(cyc_multiply(a, b), c), cyc_multiply(a, cyc_multiply(b, c)));
      EXPECT_EQ(cyc_multiply(a, b), cyc_multiply(b, a));
    }
  }
}

TEST(CyclotomicProperty, PhiDividesXToTheN) {
  for (unsigned n = 1; n <= 60; ++n) {
    const auto phi = cyclotomic_polynomial(n);
    EXPECT_EQ(phi.degree(), static_cast<int>(euler_phi(n))) << n;
    const auto xn = UniPolynomial::monomial(1, n) - UniPolynomial{1};
    EXPECT_TRUE(divmod(xn, phi).second.is_zero()) << n;
  }
}

}  // namespace
}  // namespace numlab::numbers
