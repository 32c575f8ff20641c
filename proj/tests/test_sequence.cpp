#include <ghcode/sequence.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <thread>
#include <vector>

using namespace ghcode;

TEST(GHSequence, KnownTerms) {
    EXPECT_TRUE(GHSequence(-2).term(1) == -2);
    EXPECT_TRUE(GHSequence(-6).term(3) == 1);
    EXPECT_TRUE(GHSequence(-4).term(6) == 13);

    const GHSequence s(-2);
    const std::vector<int> initial{-2, 3, 1, 4, 5, 9, 14};
    for (std::size_t i = 0; i < initial.size(); ++i) EXPECT_TRUE(s.term(i + 1) == initial[i]) << i + 1;
}

TEST(GHSequence, RejectsParameterAboveMinusTwo) {
    EXPECT_THROW(GHSequence(-1), std::invalid_argument);
    EXPECT_THROW(GHSequence(0), std::invalid_argument);
    EXPECT_THROW(GHSequence(7), std::invalid_argument);
    EXPECT_NO_THROW(GHSequence(-2));
}

TEST(GHSequence, IndexErrors) {
    const GHSequence s(-3);
    EXPECT_THROW(s.term(0), std::invalid_argument);
    EXPECT_THROW(s.term(s.horizon() + 1), std::out_of_range);
    EXPECT_NO_THROW(s.term(s.horizon()));
}

TEST(GHSequence, HorizonCoversIndex170ForSmallParameters) {
    for (std::int64_t a = -20; a <= -2; ++a) EXPECT_GE(GHSequence(a).horizon(), 170u) << a;
}

TEST(GHSequence, MatchesPlainRecurrence) {
    for (std::int64_t a = -20; a <= -2; ++a) {
        const GHSequence s(a);
        const auto ref = testkit::gh_terms(a, 120);
        for (std::size_t i = 1; i <= 120; ++i) ASSERT_TRUE(s.term(i) == ref[i]) << "a=" << a << " i=" << i;
    }
}

TEST(GHSequence, StructuralInvariants) {
    for (std::int64_t a = -40; a <= -2; ++a) {
        const GHSequence s(a);
        EXPECT_TRUE(s.term(3) == 1);
        EXPECT_TRUE(s.term(6) == s.term(4) + s.term(5));
        for (std::size_t i = 3; i <= s.horizon(); ++i) ASSERT_TRUE(s.term(i) == s.term(i - 1) + s.term(i - 2));
        for (std::size_t i = 6; i < s.horizon(); ++i) {
            ASSERT_TRUE(s.term(i) > 0);
            ASSERT_TRUE(s.term(i + 1) > s.term(i));
        }
        if (a <= -5) {
            const auto k = *s.gap_parameter();
            EXPECT_EQ(k, -(a + 4));
            EXPECT_TRUE(s.term(6) == 2 * k + 13);
        } else {
            EXPECT_FALSE(s.gap_parameter().has_value());
        }
    }
    EXPECT_TRUE(GHSequence(-2).term(6) == 9);
    EXPECT_TRUE(GHSequence(-3).term(6) == 11);
    EXPECT_TRUE(GHSequence(-4).term(6) == 13);
}

TEST(GHSequence, PartialSumIdentity) {
    for (std::int64_t a = -20; a <= -2; ++a) {
        const GHSequence s(a);
        Integer sum = 0;
        for (std::size_t r = 2; r <= 40; ++r) {
            sum += s.term(r);
            ASSERT_TRUE(sum == s.term(r + 2) - 1) << "a=" << a << " r=" << r;
        }
    }
}

TEST(GHSequence, GrowthRatio) {
    for (std::int64_t a = -20; a <= -2; ++a) {
        const GHSequence s(a);
        for (std::size_t i = 8; i < 100; ++i) {
            const auto ratio = static_cast<double>(s.term(i + 1)) / static_cast<double>(s.term(i));
            ASSERT_GE(ratio, 1.5) << "a=" << a << " i=" << i;
        }
    }
}

TEST(GHSequence, LargestRemainingLeq) {
    EXPECT_EQ(GHSequence(-2).largest_remaining_leq(10), std::optional<std::size_t>(6));
    EXPECT_EQ(GHSequence(-2).largest_remaining_leq(8), std::nullopt);
    // -5, 6, 1, 7, 8, 15 by the recurrence
    const auto ref = testkit::gh_terms(-5, 7);
    ASSERT_TRUE(ref[6] == 15 && ref[7] == 23);
    EXPECT_EQ(GHSequence(-5).largest_remaining_leq(15), std::optional<std::size_t>(6));
    EXPECT_EQ(GHSequence(-5).largest_remaining_leq(22), std::optional<std::size_t>(6));
    EXPECT_EQ(GHSequence(-5).largest_remaining_leq(23), std::optional<std::size_t>(7));
}

TEST(GHSequence, LargestRemainingLeqAgainstLinearScan) {
    for (std::int64_t a : {-2, -3, -4, -9, -17}) {
        const GHSequence s(a);
        for (Integer n = 1; n < 5000; n += 7) {
            std::optional<std::size_t> expect;
            for (std::size_t i = 6; s.term(i) <= n; ++i) expect = i;
            ASSERT_EQ(s.largest_remaining_leq(n), expect) << "a=" << a;
        }
    }
}

TEST(GHSequence, ConcurrentReads) {
    const GHSequence s(-7);
    std::vector<std::jthread> pool;
    std::atomic<int> mismatches = 0;
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&] {
            for (int rep = 0; rep < 1000; ++rep) {
                for (std::size_t i = 3; i <= 80; ++i) {
                    if (s.term(i) != s.term(i - 1) + s.term(i - 2)) ++mismatches;
                }
            }
        });
    }
    pool.clear();
    EXPECT_EQ(mismatches.load(), 0);
}

TEST(FibSequence, Terms) {
    const FibSequence f;
    const std::vector<int> head{1, 2, 3, 5, 8, 13, 21};
    for (std::size_t i = 0; i < head.size(); ++i) EXPECT_TRUE(f.term(i + 1) == head[i]);
    for (std::size_t i = 2; i < f.horizon(); ++i) ASSERT_TRUE(f.term(i + 1) > f.term(i));
    EXPECT_EQ(f.largest_leq(0), std::nullopt);
    EXPECT_EQ(f.largest_leq(1), std::optional<std::size_t>(1));
    EXPECT_EQ(f.largest_leq(12), std::optional<std::size_t>(5));
}
