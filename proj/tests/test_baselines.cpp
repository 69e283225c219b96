#include "narayana/codec.hpp"
#include "narayana/error.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace narayana;

namespace {

// Zeckendorf mask over 1, 2, 3, 5, ... found by brute force.
std::string fibonacci_oracle(std::int64_t n, const std::map<std::int64_t, std::vector<std::uint32_t>>& reps)
{
    return oracle::mask_to_codeword(reps.at(n).front());
}

} // namespace

TEST(Fibonacci, Examples)
{
    EXPECT_EQ(fibonacci_encode(1).to_string(), "11");
    EXPECT_EQ(fibonacci_encode(2).to_string(), "011");
    EXPECT_EQ(fibonacci_encode(4).to_string(), "1011");
    EXPECT_EQ(fibonacci_encode(11).to_string(), "001011");
    EXPECT_EQ(fibonacci_length(11), 6u);
}

TEST(Fibonacci, MatchesUniqueNonAdjacentMasks)
{
    const auto terms = oracle::fibonacci_terms(20); // reaches 10946
    const auto reps = oracle::enumerate_representations(terms, 2, 10000);
    for (Integer n = 1; n <= 10000; ++n) {
        ASSERT_EQ(reps.at(n).size(), 1u) << n;
        const auto cw = fibonacci_encode(n);
        ASSERT_EQ(cw.to_string(), fibonacci_oracle(n, reps)) << n;
        ASSERT_EQ(fibonacci_decode(cw), n);
        ASSERT_EQ(fibonacci_length(n), cw.size());
    }
}

TEST(Fibonacci, SeriesAndExtremes)
{
    const auto f = fibonacci_series();
    EXPECT_EQ(f[0], 1);
    EXPECT_EQ(f[1], 2);
    EXPECT_EQ(f.size(), 91u); // F(92) is the last Fibonacci number below 2^63
    for (Integer n : {kMaxEncodable, f.back(), f.back() - 1}) EXPECT_EQ(fibonacci_decode(fibonacci_encode(n)), n);
}

TEST(Fibonacci, RejectsMalformed)
{
    for (const char* bad : {"", "1", "10", "0110", "110011"}) {
        EXPECT_THROW((void)fibonacci_decode(Codeword::from_string(bad)), MalformedCodeword) << bad;
    }
    EXPECT_THROW((void)fibonacci_encode(0), std::invalid_argument);
}

TEST(EliasGamma, Examples)
{
    EXPECT_EQ(elias_gamma_encode(1).to_string(), "1");
    EXPECT_EQ(elias_gamma_encode(2).to_string(), "010");
    EXPECT_EQ(elias_gamma_encode(10).to_string(), "0001010");
    EXPECT_EQ(elias_gamma_length(10), 7u);
}

TEST(EliasGamma, RoundTripsAgainstStringOracle)
{
    for (Integer n = 1; n <= 100000; ++n) {
        const auto cw = elias_gamma_encode(n);
        ASSERT_EQ(cw.to_string(), oracle::gamma_codeword(static_cast<std::uint64_t>(n))) << n;
        ASSERT_EQ(elias_gamma_decode(cw), n);
        ASSERT_EQ(elias_gamma_length(n), cw.size());
    }
    EXPECT_EQ(elias_gamma_length(kMaxEncodable), 125u);
    EXPECT_EQ(elias_gamma_decode(elias_gamma_encode(kMaxEncodable)), kMaxEncodable);
}

TEST(EliasGamma, RejectsMalformed)
{
    for (const char* bad : {"", "0", "00", "0111", "001", "0101", "10"}) {
        EXPECT_THROW((void)elias_gamma_decode(Codeword::from_string(bad)), MalformedCodeword) << bad;
    }
    EXPECT_THROW((void)elias_gamma_encode(0), std::invalid_argument);
}

TEST(Baselines, StreamsRoundTrip)
{
    std::mt19937_64 rng(3);
    for (auto code : kAllCodes) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Integer> values(trial % 50);
            for (auto& v : values) v = std::uniform_int_distribution<Integer>(1, Integer{1} << (trial % 60 + 1))(rng);
            const auto buffer = encode_stream(code, values);
            std::uint64_t bits = 0;
            for (auto v : values) bits += code_length(code, v);
            ASSERT_EQ(buffer.bit_length(), bits) << code_name(code);
            ASSERT_EQ(decode_stream(code, buffer), values) << code_name(code);
        }
    }
}

TEST(Baselines, GammaStreamResidue)
{
    // "010" "1" = 2, 1; padding zeros follow.
    EXPECT_EQ(decode_stream(Code::EliasGamma, BitBuffer::from_bytes({0x50})), (std::vector<Integer>{2, 1}));
    // "0001" is a truncated codeword.
    EXPECT_THROW((void)decode_stream(Code::EliasGamma, BitBuffer::from_bytes({0x51})), TrailingGarbage);
    EXPECT_EQ(decode_stream(Code::EliasGamma, BitBuffer::from_bytes({0x51}), StreamMode::Permissive),
              (std::vector<Integer>{2, 1}));
    EXPECT_THROW((void)decode_stream(Code::EliasGamma, BitBuffer::from_bytes({0x50, 0x00})), TrailingGarbage);
}

TEST(Baselines, DispatchMatchesDirectCalls)
{
    for (Integer n : {Integer{1}, Integer{7}, Integer{1000}, kMaxEncodable}) {
        EXPECT_EQ(encode(Code::Narayana, n), encode(n));
        EXPECT_EQ(encode(Code::Fibonacci, n), fibonacci_encode(n));
        EXPECT_EQ(encode(Code::EliasGamma, n), elias_gamma_encode(n));
        for (auto code : kAllCodes) EXPECT_EQ(decode(code, encode(code, n)), n);
    }
}
