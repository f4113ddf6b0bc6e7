#include <gtest/gtest.h>

#include <random>

#include "gcdmorph/catalog.hpp"
#include "gcdmorph/codec.hpp"
#include "oracle.hpp"

using namespace gcdmorph;

namespace {

const CodePrefix kNaturalsCode{1, 2, 3, 2, 5, 1, 7, 2, 3, 1, 11, 1, 13, 1, 1, 2, 17};
const CodePrefix kFibonacciCode{1, 1, 2, 3, 5, 4, 13, 7, 17, 11, 89, 6};
const SeqPrefix kFibonacci{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
const SeqPrefix kFactorial{1, 2, 6, 24, 120, 720};

}  // namespace

TEST(Encode, Naturals) {
    const auto r = encode(catalog::emit("naturals", 17));
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.code(), kNaturalsCode);
}

TEST(Encode, Fibonacci) {
    const auto r = encode(kFibonacci);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.code(), kFibonacciCode);
}

TEST(Encode, OnesAndConstant) {
    EXPECT_EQ(encode(SeqPrefix::ones(10)).code(), CodePrefix::ones(10));
    EXPECT_EQ(encode(SeqPrefix{5, 5, 5, 5}).code(), (CodePrefix{5, 1, 1, 1}));
}

TEST(Encode, FactorialSucceedsDespiteNotBeingMorphic) {
    const auto r = encode(kFactorial);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.code(), (CodePrefix{1, 2, 6, 12, 120, 60}));
}

TEST(Encode, ReportsFirstInexactDivision) {
    // c = (1,2,3,2,5); F_6 = 7 is not divisible by c_1 c_2 c_3 = 6
    const auto r = encode(SeqPrefix{1, 2, 3, 4, 5, 7});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.failure(), (EncodeFailure{6, PosInt{7}, PosInt{6}}));
    EXPECT_THROW(r.code(), std::bad_variant_access);

    const auto r2 = encode(SeqPrefix{2, 3});
    ASSERT_FALSE(r2.ok());
    EXPECT_EQ(r2.failure(), (EncodeFailure{2, PosInt{3}, PosInt{2}}));
}

TEST(Decode, Examples) {
    EXPECT_EQ(decode(kNaturalsCode), catalog::emit("naturals", 17));
    EXPECT_EQ(decode(kFibonacciCode), kFibonacci);
    EXPECT_EQ(decode(CodePrefix{1, 1, 1, 5, 1, 1, 1, 1, 1, 1, 1, 1}), primary_prefix({5, 4}, 12));
}

TEST(Decode, SingleNonUnitCodeIsPrimary) {
    for (std::size_t period = 1; period <= 10; ++period) {
        const auto c = CodePrefix::ones(30).with(period, PosInt{13});
        EXPECT_EQ(decode(c), primary_prefix({13, period}, 30));
    }
}

TEST(Decode, EqualsProductOfPrimaries) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto c = oracle::random_code(rng, 48, 50);
        SeqPrefix product = SeqPrefix::ones(c.length());
        for (std::size_t j = 1; j <= c.length(); ++j)
            product = pointwise_product(product, primary_prefix({c[j], j}, c.length()));
        ASSERT_EQ(decode(c), product);
    }
}

TEST(Decode, MatchesNaiveOracle) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto c = oracle::random_code(rng, 96, 1000);
        ASSERT_EQ(oracle::raw(decode(c)), oracle::decode(oracle::raw(c)));
    }
}

TEST(Decode, TermDependsOnlyOnDivisorCodes) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const auto c = oracle::random_code(rng, 64, 100);
        const std::size_t m = rng() % c.length() + 1;
        const auto perturbed = c.with(m, c[m] * PosInt{7});
        const auto f = decode(c), g = decode(perturbed);
        for (std::size_t n = 1; n <= c.length(); ++n) {
            if (n % m != 0) {
                ASSERT_EQ(f[n], g[n]) << "n=" << n << " m=" << m;
            }
        }
    }
}

TEST(RoundTrip, EncodeDecodeIsIdentityOnCodes) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        const auto c = oracle::random_code(rng, 256, 1'000'000);
        const auto r = encode(decode(c));
        ASSERT_TRUE(r.ok());
        ASSERT_EQ(r.code(), c);
    }
}

TEST(RoundTrip, DecodeEncodeIsIdentityOnEncodableSequences) {
    std::mt19937_64 rng(2);
    int encodable = 0;
    for (int i = 0; i < 2000; ++i) {
        std::vector<PosInt> terms(rng() % 12 + 1);
        for (auto& t : terms) t = PosInt{rng() % 4 + 1};
        const SeqPrefix f(std::move(terms));
        const auto r = encode(f);
        const auto naive = oracle::encode(oracle::raw(f));
        ASSERT_EQ(r.ok(), naive.has_value());
        if (!r) continue;
        ++encodable;
        ASSERT_EQ(oracle::raw(r.code()), *naive);
        ASSERT_EQ(decode(r.code()), f);
    }
    EXPECT_GT(encodable, 100);
}

TEST(Peel, Examples) {
    const auto p = peel_primary(SeqPrefix{1, 2, 3, 4, 5, 6, 7, 8}, 1);
    EXPECT_EQ(p.primary, (PrimarySpec{1, 1}));
    EXPECT_EQ(p.rest, (SeqPrefix{1, 2, 3, 4, 5, 6, 7, 8}));

    const auto q = peel_primary(SeqPrefix{1, 2, 3, 4, 5, 6, 7, 8}, 2);
    EXPECT_EQ(q.primary, (PrimarySpec{2, 2}));
    EXPECT_EQ(q.rest, (SeqPrefix{1, 1, 3, 2, 5, 3, 7, 4}));
    EXPECT_EQ(pointwise_product(primary_prefix(q.primary, 8), q.rest), (SeqPrefix{1, 2, 3, 4, 5, 6, 7, 8}));

    const auto ones = peel_primary(SeqPrefix::ones(5), 1);
    EXPECT_EQ(ones.primary, (PrimarySpec{1, 1}));
    EXPECT_EQ(ones.rest, SeqPrefix::ones(5));

    const auto prim = peel_primary(SeqPrefix{1, 1, 1, 5, 1, 1, 1, 5}, 4);
    EXPECT_EQ(prim.primary, (PrimarySpec{5, 4}));
    EXPECT_EQ(prim.rest, SeqPrefix::ones(8));
}

TEST(Peel, Errors) {
    try {
        peel_primary(SeqPrefix{1, 2, 3, 4}, 3);
        FAIL() << "expected HypothesisViolated";
    } catch (const HypothesisViolated& e) {
        EXPECT_EQ(e.index(), 2u);
    }
    try {
        peel_primary(SeqPrefix{1, 2, 3, 5, 5, 6}, 2);
        FAIL() << "expected NotDivisible";
    } catch (const NotDivisible& e) {
        EXPECT_EQ(e.index(), 4u);
    }
    EXPECT_THROW(peel_primary(SeqPrefix{1, 2}, 3), std::out_of_range);
}

TEST(Peel, IteratedPeelingRecoversCode) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto c = oracle::random_code(rng, 60, 30);
        SeqPrefix current = decode(c);
        for (std::size_t n = 1; n <= c.length(); ++n) {
            const auto p = peel_primary(current, n);
            ASSERT_EQ(p.primary.value, c[n]);
            ASSERT_EQ(pointwise_product(primary_prefix(p.primary, c.length()), p.rest), current);
            current = p.rest;
        }
        ASSERT_EQ(current, SeqPrefix::ones(c.length()));
    }
}
