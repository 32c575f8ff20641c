#include <ghcode/gh_codec.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace ghcode;

namespace {

std::string code_text(const EncodeOutcome& out) { return out.code ? out.code->to_string() : "-"; }

std::string lookup_text(std::int64_t a, Integer r) {
    auto b = remainder_lookup(a, r);
    return b ? b->to_string() : "-";
}

}  // namespace

TEST(RemainderTable, Examples) {
    EXPECT_EQ(lookup_text(-2, 7), "01010");
    EXPECT_EQ(lookup_text(-5, 5), "-");
    EXPECT_EQ(lookup_text(-4, 10), "10111");
    EXPECT_EQ(lookup_text(-6, 13), "-");
    EXPECT_EQ(lookup_text(-6, 14), "-");
    EXPECT_EQ(lookup_text(-6, 15), "01010");
}

TEST(RemainderTable, OutOfRange) {
    EXPECT_THROW(remainder_lookup(-2, -1), std::invalid_argument);
    EXPECT_THROW(remainder_lookup(-2, 9), std::invalid_argument);
    EXPECT_THROW(remainder_lookup(-7, 19), std::invalid_argument);
    EXPECT_NO_THROW(remainder_lookup(-7, 18));
}

TEST(RemainderTable, RowsEvaluateToTheirKeys) {
    for (std::int64_t a = -30; a <= -2; ++a) {
        const GHCodec codec(a);
        for (const auto& e : codec.table().entries()) {
            ASSERT_TRUE(value(codec.sequence(), std::span<const std::uint8_t>(e.bits)) == e.remainder) << "a=" << a;
        }
    }
}

TEST(RemainderTable, KeysMatchExhaustiveSearch) {
    for (std::int64_t a = -30; a <= -2; ++a) {
        const GHCodec codec(a);
        std::set<Integer> keys;
        for (const auto& e : codec.table().entries()) keys.insert(e.remainder);
        EXPECT_EQ(keys, testkit::five_bit_reachable(a)) << "a=" << a;
    }
}

TEST(RemainderTable, GapIntervals) {
    for (std::int64_t a = -4; a <= -2; ++a) EXPECT_TRUE(GHCodec(a).table().gap_intervals().empty());
    for (std::int64_t k = 1; k <= 16; ++k) {
        const auto gaps = GHCodec(-(4 + k)).table().gap_intervals();
        ASSERT_EQ(gaps.size(), 2u);
        EXPECT_TRUE(gaps[0].first == 5 && gaps[0].second == k + 4) << k;
        EXPECT_TRUE(gaps[1].first == k + 11 && gaps[1].second == 2 * k + 10) << k;
    }
}

TEST(GreedyRemaining, Examples) {
    auto s = greedy_remaining(-2, 10);
    EXPECT_EQ(s.picked, std::vector<std::size_t>{6});
    EXPECT_TRUE(s.n1 == 9 && s.n0 == 1);

    s = greedy_remaining(-2, 7);
    EXPECT_TRUE(s.picked.empty());
    EXPECT_TRUE(s.n1 == 0 && s.n0 == 7);

    // -4, 5, 1, 6, 7, 13, 20, 33, 53, 86: 86 + 33 + 13 = 132
    const auto t = testkit::gh_terms(-4, 10);
    ASSERT_TRUE(t[10] + t[8] + t[6] == 132);
    s = greedy_remaining(-4, 135);
    EXPECT_EQ(s.picked, (std::vector<std::size_t>{10, 8, 6}));
    EXPECT_TRUE(s.n1 == 132 && s.n0 == 3);
}

TEST(GreedyRemaining, SpacingAndBounds) {
    for (std::int64_t a = -20; a <= -2; ++a) {
        const GHCodec codec(a);
        for (Integer n = 1; n <= 5000; ++n) {
            const auto s = codec.greedy_remaining(n);
            ASSERT_TRUE(s.n0 + s.n1 == n);
            ASSERT_TRUE(s.n0 >= 0 && s.n0 < codec.sequence().term(6));
            for (std::size_t i = 0; i + 1 < s.picked.size(); ++i) {
                ASSERT_GT(s.picked[i], s.picked[i + 1] + 1) << "a=" << a;
            }
            for (auto idx : s.picked) ASSERT_GE(idx, 6u);
        }
    }
}

TEST(EncodeSimple, Examples) {
    EXPECT_EQ(code_text(encode_simple(-2, 7)), "01011");
    EXPECT_EQ(code_text(encode_simple(-5, 12)), "-");
    EXPECT_EQ(code_text(encode_simple(-4, 135)), "100000000011");
}

TEST(EncodeFast, Examples) {
    const auto seven = encode_fast(-2, 7);
    EXPECT_EQ(code_text(seven), "01011");
    EXPECT_FALSE(seven.used_fallback);

    const auto twenty = encode_fast(-5, 20);
    EXPECT_EQ(code_text(twenty), "-");
    EXPECT_TRUE(twenty.used_fallback);

    const auto big = encode_fast(-6, 649);
    EXPECT_EQ(code_text(big), "10000000001011");
    EXPECT_NE(code_text(big), "10000000110011");
    EXPECT_EQ(big.picked, (std::vector<std::size_t>{13, 10, 8, 6}));
    EXPECT_TRUE(big.n0 == 3 && big.n1 == 646);
    EXPECT_TRUE(testkit::text_value(testkit::gh_terms(-6, 20), "1000000000101") == 649);
}

TEST(EncodeFast, FallbackProducesPrefixedCode) {
    // 13 = GH[2] + GH[4] = 6 + 7 for a = -5 is itself a table row.
    const auto out = encode_fast(-5, 13);
    ASSERT_TRUE(out.code);
    EXPECT_FALSE(out.used_fallback);
    EXPECT_EQ(out.code->to_string(), "01011");

    int fallbacks = 0;
    const GHCodec codec(-9);
    for (Integer n = 1; n <= 3000; ++n) {
        const auto o = codec.encode_fast(n);
        if (o.code && o.used_fallback) {
            ++fallbacks;
            ASSERT_EQ(o.code->to_string().substr(0, 5), "01010");
        }
    }
    EXPECT_GT(fallbacks, 0);
}

TEST(Exists, Examples) {
    EXPECT_TRUE(exists(-3, 57));
    EXPECT_FALSE(exists(-5, 5));
    EXPECT_TRUE(exists(-5, 13));
    EXPECT_FALSE(exists(-5, 12));
}

TEST(Encode, PreconditionErrors) {
    EXPECT_THROW(encode_fast(-2, 0), std::invalid_argument);
    EXPECT_THROW(encode_simple(-2, -5), std::invalid_argument);
    EXPECT_THROW(exists(-1, 5), std::invalid_argument);
}

TEST(Decode, Examples) {
    EXPECT_TRUE(decode(-2, "1000011") == 7);
    EXPECT_TRUE(decode(-6, "10000000001011") == 649);
    try {
        decode(-2, "11");
        FAIL() << "11 decoded under a=-2";
    } catch (const CodeError& e) {
        EXPECT_EQ(e.kind(), CodeErrorKind::NonPositiveValue);
        EXPECT_FALSE(e.malformed());
    }
    try {
        decode(-4, "10000000111");
        FAIL() << "erroneous code decoded";
    } catch (const CodeError& e) {
        EXPECT_TRUE(e.malformed());
    }
}

TEST(Decode, OverlongCodeword) {
    const GHCodec codec(-3);
    std::string text(codec.sequence().horizon() + 5, '0');
    text[text.size() - 2] = '1';
    text[text.size() - 1] = '1';
    try {
        codec.decode(text);
        FAIL();
    } catch (const CodeError& e) {
        EXPECT_EQ(e.kind(), CodeErrorKind::ValueOverflow);
    }
}

TEST(Codec, RoundTripAndAgreement) {
    for (std::int64_t a = -20; a <= -2; ++a) {
        const GHCodec codec(a);
        for (Integer n = 1; n <= 2000; ++n) {
            const auto fast = codec.encode_fast(n);
            const auto simple = codec.encode_simple(n);
            ASSERT_EQ(fast.code.has_value(), simple.code.has_value()) << "a=" << a << " n=" << static_cast<long>(n);
            for (const auto* out : {&fast, &simple}) {
                if (!out->code) continue;
                ASSERT_TRUE(out->n0 + out->n1 == n);
                ASSERT_TRUE(codec.decode(*out->code) == n);
            }
        }
    }
}

TEST(Codec, LargeValues) {
    const GHCodec codec(-3);
    const Integer big = codec.sequence().term(150) + 987654321;
    const auto code = codec.encode(big);
    ASSERT_TRUE(code);
    EXPECT_TRUE(codec.decode(*code) == big);
}
