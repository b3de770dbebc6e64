#include <random>

#include <gtest/gtest.h>

#include "okamoto/errors.hpp"
#include "okamoto/ternary.hpp"
#include "oracles/oracles.hpp"

using okamoto::count_digit;
using okamoto::Digit;
using okamoto::DigitSeq;
using okamoto::ExactRational;
using okamoto::f_weight;
using okamoto::walk_value;

namespace {

DigitSeq expand(std::int64_t p, std::int64_t q) { return okamoto::expand_rational(ExactRational(p, q)); }

std::vector<Digit> digits(std::initializer_list<int> list) {
    std::vector<Digit> out;
    for (int d : list) {
        out.push_back(static_cast<Digit>(d));
    }
    return out;
}

}  // namespace

TEST(ExpandRational, TerminatingValueEndsInZeros) {
    const DigitSeq x = expand(1, 3);
    EXPECT_EQ(x.preperiod(), digits({1}));
    EXPECT_EQ(x.period(), digits({0}));
    EXPECT_TRUE(x.terminates());
}

TEST(ExpandRational, OneUsesAllTwos) {
    const DigitSeq x = expand(1, 1);
    EXPECT_TRUE(x.preperiod().empty());
    EXPECT_EQ(x.period(), digits({2}));
}

TEST(ExpandRational, QuarterIsPurelyPeriodic) {
    const DigitSeq x = expand(1, 4);
    EXPECT_TRUE(x.preperiod().empty());
    EXPECT_EQ(x.period(), digits({0, 2}));
}

TEST(ExpandRational, ZeroAndMixedCases) {
    EXPECT_EQ(expand(0, 1).period(), digits({0}));
    EXPECT_TRUE(expand(0, 1).preperiod().empty());
    // 5/9 = 0.12
    EXPECT_EQ(expand(5, 9).preperiod(), digits({1, 2}));
    // 1/6 = 0.0111...
    EXPECT_EQ(expand(1, 6).preperiod(), digits({0}));
    EXPECT_EQ(expand(1, 6).period(), digits({1}));
    // 1/26 = 0.(001)
    EXPECT_EQ(expand(1, 26).period(), digits({0, 0, 1}));
}

TEST(ExpandRational, RejectsValuesOutsideUnitInterval) {
    EXPECT_THROW(expand(-1, 3), okamoto::domain_error);
    EXPECT_THROW(expand(4, 3), okamoto::domain_error);
}

TEST(DigitSeq, FromDigitsNormalizes) {
    // 0.1222... == 0.2
    const DigitSeq x = DigitSeq::from_digits(digits({1}), digits({2}));
    EXPECT_EQ(x, expand(2, 3));
    // Rotatable preperiod and non-minimal period.
    const DigitSeq y = DigitSeq::from_digits(digits({0, 2, 0}), digits({2, 0, 2, 0}));
    EXPECT_EQ(y, expand(1, 4));
    EXPECT_THROW(DigitSeq::from_digits(digits({}), digits({})), okamoto::domain_error);
    EXPECT_THROW(DigitSeq::from_digits(digits({3}), digits({0})), okamoto::domain_error);
}

TEST(DigitAt, MatchesExamples) {
    EXPECT_EQ(okamoto::digit_at(expand(1, 4), 1), 0);
    EXPECT_EQ(okamoto::digit_at(expand(1, 4), 2), 2);
    EXPECT_EQ(okamoto::digit_at(expand(1, 1), 7), 2);
    EXPECT_THROW((void)okamoto::digit_at(expand(1, 4), 0), okamoto::range_error);
}

TEST(CountDigit, MatchesExamples) {
    EXPECT_EQ(count_digit(expand(1, 2), 1, 1, 5), 5U);
    EXPECT_EQ(count_digit(expand(0, 1), 1, 1, 100), 0U);
    EXPECT_EQ(count_digit(expand(5, 9), 1, 1, 4), 1U);
    EXPECT_THROW((void)count_digit(expand(1, 2), 1, 5, 4), okamoto::range_error);
    EXPECT_THROW((void)count_digit(expand(1, 2), 1, 0, 4), okamoto::range_error);
}

TEST(WalkValue, MatchesExamples) {
    EXPECT_EQ(walk_value(expand(0, 1), 10), 10);
    EXPECT_EQ(walk_value(expand(1, 2), 4), -8);
    EXPECT_EQ(walk_value(expand(5, 9), 3), 0);
}

TEST(FWeight, MatchesExamples) {
    for (std::uint64_t n : {1U, 7U, 100U}) {
        EXPECT_EQ(f_weight(expand(0, 1), 1, n), 3 * static_cast<std::int64_t>(n));
        EXPECT_EQ(f_weight(expand(1, 2), 1, n), -6 * static_cast<std::int64_t>(n));
    }
    EXPECT_THROW((void)f_weight(expand(1, 2), 3, 2), okamoto::range_error);
}

TEST(DigitFrequency, ReadsPeriodBlock) {
    const auto quarter = okamoto::digit_frequency(expand(1, 4));
    EXPECT_EQ(quarter.p0, ExactRational(1, 2));
    EXPECT_EQ(quarter.p1, ExactRational(0));
    EXPECT_EQ(quarter.p2, ExactRational(1, 2));
    const auto half = okamoto::digit_frequency(expand(1, 2));
    EXPECT_EQ(half.p1, ExactRational(1));
    const auto zero = okamoto::digit_frequency(expand(0, 1));
    EXPECT_EQ(zero.p0, ExactRational(1));
}

TEST(DigitStats, CountsSumToN) {
    const auto stats = okamoto::digit_stats(expand(7, 13), 1000);
    EXPECT_EQ(stats.counts[0] + stats.counts[1] + stats.counts[2], 1000U);
}

TEST(TernaryProperties, RoundTripExhaustiveSmallDenominators) {
    for (std::int64_t q = 1; q <= 243; ++q) {
        for (std::int64_t p = 0; p <= q; ++p) {
            const ExactRational x(p, q);
            const DigitSeq seq = okamoto::expand_rational(x);
            ASSERT_EQ(okamoto::reconstruct(seq.preperiod(), seq.period()), x) << p << "/" << q;
        }
    }
}

TEST(TernaryProperties, RoundTripCanonicalAndDigitsAgreeWithMultiplication) {
    std::mt19937_64 rng(20240521);
    std::uniform_int_distribution<std::int64_t> den(1, 10000);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::int64_t q = den(rng);
        const std::int64_t p = std::uniform_int_distribution<std::int64_t>(0, q)(rng);
        const ExactRational x(p, q);
        const DigitSeq seq = okamoto::expand_rational(x);
        ASSERT_EQ(okamoto::reconstruct(seq.preperiod(), seq.period()), x);
        // Only x = 1 may end in all 2's.
        const bool all_twos = seq.period().size() == 1 && seq.period()[0] == 2;
        ASSERT_EQ(all_twos, x == ExactRational(1)) << p << "/" << q;
        if (x < ExactRational(1)) {
            const auto reference = oracle::digits_by_multiplication(x.raw(), 60);
            for (std::size_t k = 1; k <= reference.size(); ++k) {
                ASSERT_EQ(seq.digit_at(k), reference[k - 1]) << p << "/" << q << " k=" << k;
            }
        }
        // Normal form is unique: re-normalizing changes nothing.
        ASSERT_EQ(DigitSeq::from_digits(seq.preperiod(), seq.period()), seq);
    }
}

TEST(TernaryProperties, WeightIsThreeTimesWalkAndCountsAreAdditive) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, 5000)(rng);
        const std::int64_t p = std::uniform_int_distribution<std::int64_t>(0, q)(rng);
        const DigitSeq x = expand(p, q);
        const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 3000)(rng);
        ASSERT_EQ(f_weight(x, 1, n), 3 * walk_value(x, n));

        const std::uint64_t a = std::uniform_int_distribution<std::uint64_t>(1, 500)(rng);
        const std::uint64_t b = a + std::uniform_int_distribution<std::uint64_t>(0, 500)(rng);
        const std::uint64_t c = b + std::uniform_int_distribution<std::uint64_t>(1, 500)(rng);
        for (Digit i = 0; i < 3; ++i) {
            ASSERT_EQ(count_digit(x, i, a, c), count_digit(x, i, a, b) + count_digit(x, i, b + 1, c));
        }
        // Brute-force count against digit_at.
        std::uint64_t ones = 0;
        for (std::uint64_t k = a; k <= b; ++k) {
            ones += x.digit_at(k) == 1 ? 1 : 0;
        }
        ASSERT_EQ(count_digit(x, 1, a, b), ones);
    }
}

TEST(TernaryPrefix, ExactDigitsOfDoubles) {
    EXPECT_EQ(okamoto::ternary_prefix(1.0, 4), digits({2, 2, 2, 2}));
    EXPECT_EQ(okamoto::ternary_prefix(0.0, 3), digits({0, 0, 0}));
    EXPECT_EQ(okamoto::ternary_prefix(0.25, 6), digits({0, 2, 0, 2, 0, 2}));
    const double x = 0.7071067811865476;
    const auto reference = oracle::digits_by_multiplication(ExactRational::from_double(x).raw(), 50);
    EXPECT_EQ(okamoto::ternary_prefix(x, 50), std::vector<Digit>(reference.begin(), reference.end()));
    EXPECT_THROW((void)okamoto::ternary_prefix(1.5, 3), okamoto::domain_error);
}
