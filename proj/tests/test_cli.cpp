#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using narayana::cli::run;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result nuc(std::vector<std::string> args, const std::string& input = {})
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

std::string bytes(std::initializer_list<unsigned char> b) { return {b.begin(), b.end()}; }

} // namespace

TEST(CliEncode, WritesPackedBytes)
{
    auto r = nuc({"encode"}, "1\n2\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, bytes({0xD8}));
    EXPECT_EQ(r.err, "count=2 total_bits=5 mean_bits=2.5\n");

    EXPECT_EQ(nuc({"encode"}, "10\n").out, bytes({0x86}));
    EXPECT_EQ(nuc({"encode"}, "  10 \r\n\n").out, bytes({0x86}));

    r = nuc({"encode"}, "");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(r.err.rfind("count=0 ", 0), 0u);
}

TEST(CliEncode, ReportsBadLines)
{
    auto r = nuc({"encode"}, "1\n\nabc\n");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3"), std::string::npos);
    EXPECT_EQ(nuc({"encode"}, "0\n").code, 2);
    EXPECT_EQ(nuc({"encode"}, "-5\n").code, 2);
    EXPECT_EQ(nuc({"encode"}, "1.5\n").code, 2);
    EXPECT_EQ(nuc({"encode"}, "-99999999999999999999\n").code, 2);

    r = nuc({"encode"}, "9223372036854775807\n9223372036854775808\n");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CliDecode, InvertsEncode)
{
    EXPECT_EQ(nuc({"decode"}, bytes({0xD8})).out, "1\n2\n");
    EXPECT_EQ(nuc({"decode"}, bytes({0x86})).out, "10\n");
    EXPECT_EQ(nuc({"decode"}, "").out, "");

    const std::string text = "5\n1\n9223372036854775807\n300\n17\n";
    const auto encoded = nuc({"encode"}, text);
    ASSERT_EQ(encoded.code, 0);
    const auto decoded = nuc({"decode"}, encoded.out);
    EXPECT_EQ(decoded.code, 0);
    EXPECT_EQ(decoded.out, text);
}

TEST(CliDecode, StrictAndLenient)
{
    // 11 011 then 001: a truncated codeword.
    auto r = nuc({"decode"}, bytes({0xD9}));
    EXPECT_EQ(r.code, 4);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(nuc({"decode"}, bytes({0xD8, 0x00})).code, 4);

    r = nuc({"decode", "--lenient"}, bytes({0xD9}));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n2\n");
    EXPECT_NE(r.err.find("skipped trailing bits [5, 8)"), std::string::npos);
}

TEST(CliStats, SingleRecordAndTable)
{
    EXPECT_EQ(nuc({"stats", "--max", "1", "--emit", "curve"}).out, "n,bits\n1,2\n");
    auto r = nuc({"stats", "--max", "1"});
    EXPECT_EQ(r.out, "n,bits\n1,2\n\nlength,count,complete\n2,1,true\n");

    r = nuc({"stats", "--max", "15", "--emit", "curve"});
    std::string expected = "n,bits\n";
    const int bits[] = {2, 3, 4, 5, 5, 6, 6, 6, 7, 7, 7, 7, 8, 8, 8};
    for (int n = 1; n <= 15; ++n) expected += std::to_string(n) + "," + std::to_string(bits[n - 1]) + "\n";
    EXPECT_EQ(r.out, expected);

    r = nuc({"stats", "--max", "12", "--emit", "histogram", "--format", "json"});
    EXPECT_EQ(r.out.front(), '[');
    EXPECT_NE(r.out.find("{\"complete\":true,\"count\":4,\"length\":7}"), std::string::npos);
    EXPECT_EQ(nuc({"stats", "--max", "0"}).code, 2);
    EXPECT_EQ(nuc({"stats", "--format", "xml"}).code, 2);
}

TEST(CliRatio, SeedsAndLimit)
{
    const auto r = nuc({"ratio", "--terms", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k,ratio\n1,1\n2,1\n3,2\n4,1.5\nlimit,1.4655712318767680\n");
    EXPECT_EQ(nuc({"ratio"}).out, nuc({"ratio"}).out);
    EXPECT_EQ(nuc({"ratio", "--terms", "1"}).code, 2);
    const auto j = nuc({"ratio", "--terms", "3", "--format", "json"});
    EXPECT_EQ(j.out, "[{\"k\":1,\"ratio\":1},{\"k\":2,\"ratio\":1},{\"k\":\"limit\",\"ratio\":1.4655712318767680}]\n");
}

TEST(CliVariants, ReportsFindingsAndDiscrepancies)
{
    auto r = nuc({"variants", "--a", "-2", "--max", "30", "--gap", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n\n2\n18\n\ndiscrepancy,n\nunrepresentable_unclaimed,18\n");

    r = nuc({"variants", "--a", "-1", "--max", "30"});
    EXPECT_NE(r.out.find("claimed_but_representable,15\n"), std::string::npos);

    r = nuc({"variants", "--seeds", "-3,5,4", "--a", "-3", "--max", "30", "--format", "json"});
    EXPECT_NE(r.out.find("\"unrepresentable\":[2,13,19,26,29]"), std::string::npos);
    EXPECT_NE(r.out.find("\"claimed_but_representable\":[]"), std::string::npos);

    EXPECT_EQ(nuc({"variants", "--a", "-2", "--max", "200", "--gap", "1", "--node-budget", "4"}).code, 3);
    EXPECT_EQ(nuc({"variants", "--a", "4"}).code, 2);
    EXPECT_EQ(nuc({"variants", "--a", "-2", "--max", "10001"}).code, 2);
    EXPECT_EQ(nuc({"variants", "--a", "-2", "--gap", "4"}).code, 2);
    EXPECT_EQ(nuc({"variants"}).code, 2);
}

TEST(CliBench, DeterministicRecords)
{
    auto r = nuc({"bench", "--dist", "uniform:15", "--samples", "all"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("narayana,uniform:15,15,89,5.9333333333333336\n"), std::string::npos);

    const std::vector<std::string> args{"bench", "--dist", "zipf:1.1:1000", "--samples", "2000", "--seed", "7",
                                        "--codecs", "narayana,fibonacci,elias-gamma"};
    const auto a = nuc(args);
    EXPECT_EQ(a.out, nuc(args).out);
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 4);
    EXPECT_NE(a.out, nuc({"bench", "--dist", "zipf:1.1:1000", "--samples", "2000", "--seed", "8"}).out);

    EXPECT_EQ(nuc({"bench", "--dist", "uniform:15", "--codecs", "delta"}).code, 2);
    EXPECT_EQ(nuc({"bench", "--dist", "poisson:3"}).code, 2);
    EXPECT_EQ(nuc({"bench"}).code, 2);
    EXPECT_EQ(nuc({"bench", "--dist", "uniform:15", "--samples", "0"}).code, 2);
}

TEST(CliResync, SummaryLine)
{
    const auto r = nuc({"resync", "--symbols", "200", "--trials", "100", "--per-trial"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("trials,symbols,stream_bits,", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2 + 2 + 100);
}

TEST(CliGeneral, ParseErrorsAndHelp)
{
    EXPECT_EQ(nuc({}).code, 2);
    EXPECT_EQ(nuc({"frobnicate"}).code, 2);
    const auto h = nuc({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("encode"), std::string::npos);
    EXPECT_EQ(nuc({"decode", "--input", "/nonexistent/file.nuc"}).code, 2);
}
