#include <gtest/gtest.h>

#include <cmath>

#include "hhht/core.hpp"
#include "hhht/exact.hpp"
#include "hhht/renewal.hpp"
#include "oracles.hpp"

using namespace hhht;

TEST(CountRx, SmallValues) {
  EXPECT_EQ(count_rx(1), 0);
  EXPECT_EQ(count_rx(2), 0);
  EXPECT_EQ(count_rx(3), 1);  // HHT
  EXPECT_EQ(count_rx(4), 1);
  EXPECT_EQ(count_rx(5), 1);  // TTHHT
  EXPECT_EQ(count_rx(6), 4);  // TTTHHT, HTHHHT, HHTHHT, HHHTHT
}

TEST(CountRx, MatchesBruteForce) {
  for (std::size_t m = 2; m <= 20; ++m) {
    long brute = 0;
    for (const auto& s : oracle::all_strings(m)) {
      brute += s[m - 2] == 'H' && s[m - 1] == 'T' && oracle::score(s) == 0;
    }
    ASSERT_EQ(count_rx(m), brute) << "m=" << m;
  }
}

TEST(Pi, ExactValues) {
  EXPECT_EQ(pi_exact(3), Rational(1, 4));
  EXPECT_EQ(pi_exact(4), Rational(1, 8));
  EXPECT_EQ(pi_exact(2), 0);
  for (std::size_t m = 1; m <= 200; ++m) {
    ASSERT_GE(pi_exact(m), 0);
    ASSERT_LE(pi_exact(m), 1);
  }
}

TEST(Pi, FloatAgreesWithExactTo12Digits) {
  for (std::size_t m = 1; m <= 200; ++m) {
    const double e = pi_exact(m).get_d();
    const double f = pi_float(m);
    if (e == 0.0) {
      ASSERT_EQ(f, 0.0) << m;
    } else {
      ASSERT_NEAR(f / e, 1.0, 1e-12) << m;
    }
  }
}

TEST(Pi, FloatAtLargeMAgainstExactRational) {
  // Exact rational is affordable at m = 3000; compare at the 1e-9 level.
  const double e = pi_exact(3000).get_d();
  EXPECT_NEAR(pi_float(3000) / e, 1.0, 1e-9);
}

TEST(RenewalDiff, Examples) {
  EXPECT_EQ(renewal_diff(3), Rational(1, 8));
  EXPECT_EQ(renewal_diff(4), Rational(1, 8));
  EXPECT_EQ(renewal_diff(5), Rational(3, 32));
  EXPECT_THROW(renewal_diff(2), DomainError);
}

TEST(RenewalDiff, EqualsExactDpDifference) {
  ExactScoreDp dp(Rational(1, 2), 120);
  for (std::size_t n = 1; n <= 120; ++n) {
    dp.step();
    if (n >= 3) ASSERT_EQ(renewal_diff(n), dp.distribution().diff()) << n;
  }
}

TEST(BinomialPmf, Values) {
  EXPECT_DOUBLE_EQ(binomial_pmf(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(binomial_pmf(3, 1), 0.375);
  EXPECT_EQ(binomial_pmf_exact(3, 1), Rational(3, 8));
  EXPECT_THROW(binomial_pmf(3, 4), DomainError);
  EXPECT_THROW(binomial_pmf_exact(65, 1), DomainError);
}

TEST(BinomialPmf, FloatMatchesExactUpTo64) {
  for (std::uint64_t k = 0; k <= 64; ++k) {
    for (std::uint64_t j = 0; j <= k; ++j) {
      ASSERT_NEAR(binomial_pmf(k, j) / binomial_pmf_exact(k, j).get_d(), 1.0, 1e-13) << k << "," << j;
    }
  }
}

TEST(BinomialPmf, CentralTermLocalLimit) {
  const std::uint64_t s = 10'000;
  const double product = binomial_pmf(2 * s - 1, s - 1) * std::sqrt(M_PI * s);
  EXPECT_NEAR(product, 1.0, 0.01);
}

TEST(Asymptotics, Report) {
  const auto r100 = asymptotics(100);
  EXPECT_NEAR(r100.diff_approx, 0.0282, 5e-5);
  EXPECT_EQ(r100.tie_approx, 2.0 * r100.diff_approx);
  EXPECT_EQ(r100.deficit_A, 3.0 * r100.deficit_B);
  EXPECT_NEAR(r100.deficit_A + r100.deficit_B, r100.tie_approx, 1e-17);
  EXPECT_NEAR(asymptotics(1).diff_approx, 0.28209, 1e-5);
  EXPECT_DOUBLE_EQ(kAsymptoticConstant, 1.0 / (2.0 * std::sqrt(M_PI)));
  EXPECT_THROW(asymptotics(0), DomainError);
}

TEST(Tailwalk, TruncatedMeanJumpVanishes) {
  EXPECT_LE(std::fabs(truncated_mean_jump(60)), std::ldexp(1.0, -50));
}

TEST(Tailwalk, RecurrentAndCentred) {
  const auto w = tailwalk(1'000'000, 12345);
  EXPECT_GE(w.zero_hits, 1U);
  // The jump law has variance 1.
  EXPECT_LE(std::fabs(w.sample_mean_jump), 5.0 * 1.0 / 1000.0);
  EXPECT_NEAR(w.sample_std_jump, 1.0, 0.01);
  const auto again = tailwalk(1'000'000, 12345);
  EXPECT_EQ(again.zero_hits, w.zero_hits);
  EXPECT_THROW(tailwalk(0, 1), DomainError);
}

TEST(PiAsymptote, ApproachesConstant) {
  double prev = 1.0;
  for (std::size_t m : {100, 1000, 10000}) {
    const double dev = std::fabs(pi_float(m) * std::sqrt(double(m)) / kAsymptoticConstant - 1.0);
    EXPECT_LT(dev, prev) << m;
    prev = dev;
  }
}
