#include "gsdf/blockgen.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using gsdf::BlockTag;
using gsdf::CyclicSubset;

namespace {

CyclicSubset S(int v, std::initializer_list<int> el) { return CyclicSubset::from_elements(v, el); }

double max_nonzero_psd(const CyclicSubset& x)
{
    const auto p = oracle::psd(x);
    double m = 0;
    for (std::size_t j = 1; j < p.size(); ++j) m = std::max(m, p[j]);
    return m;
}

} // namespace

TEST(Generate, SymmetricExamples)
{
    EXPECT_EQ(gsdf::gen_symmetric(7, 3), (std::vector<CyclicSubset>{S(7, {0, 3, 4}), S(7, {0, 2, 5}), S(7, {0, 1, 6})}));
    EXPECT_EQ(gsdf::gen_symmetric(7, 2).size(), 3u);
    EXPECT_EQ(gsdf::gen_symmetric(3, 0), (std::vector<CyclicSubset>{CyclicSubset(3)}));
}

TEST(Generate, SkewExamples)
{
    EXPECT_EQ(gsdf::gen_skew(3), (std::vector<CyclicSubset>{S(3, {1}), S(3, {2})}));
    const auto s7 = gsdf::gen_skew(7);
    EXPECT_EQ(s7.size(), 8u);
    EXPECT_NE(std::find(s7.begin(), s7.end(), S(7, {1, 2, 4})), s7.end());
    EXPECT_EQ(gsdf::skew_count(43), 2'097'152u);
}

TEST(Generate, MatchesBruteForceSubsets)
{
    for (int v = 3; v <= 15; v += 2) {
        const auto skews = oracle::subsets(v, [](const CyclicSubset& x) { return gsdf::is_skew(x); });
        EXPECT_EQ(gsdf::gen_skew(v), skews) << v;
        EXPECT_EQ(gsdf::skew_count(v), skews.size());
        for (int k = 0; k <= v; ++k) {
            const auto syms =
                oracle::subsets(v, [&](const CyclicSubset& x) { return x.cardinality() == k && gsdf::is_symmetric(x); });
            EXPECT_EQ(gsdf::gen_symmetric(v, k), syms) << v << ' ' << k;
            EXPECT_EQ(gsdf::symmetric_count(v, k), syms.size()) << v << ' ' << k;
        }
    }
}

TEST(Generate, ClosedUnderNegation)
{
    for (int v = 3; v <= 21; v += 2) {
        const auto skews = gsdf::gen_skew(v);
        std::vector<CyclicSubset> neg;
        for (const auto& x : skews) neg.push_back(gsdf::negate(x));
        std::sort(neg.begin(), neg.end(), [](const CyclicSubset& a, const CyclicSubset& b) { return a.mask() < b.mask(); });
        EXPECT_EQ(neg, skews);
        for (int k = 0; k <= v; ++k)
            for (const auto& x : gsdf::gen_symmetric(v, k)) EXPECT_EQ(gsdf::negate(x), x);
    }
}

TEST(Generate, VisitorsSeeEachBlockOnce)
{
    std::vector<CyclicSubset> seen;
    gsdf::for_each_skew(23, [&](const CyclicSubset& x) { seen.push_back(x); });
    std::sort(seen.begin(), seen.end(), [](const CyclicSubset& a, const CyclicSubset& b) { return a.mask() < b.mask(); });
    EXPECT_EQ(seen, gsdf::gen_skew(23));
    seen.clear();
    gsdf::for_each_symmetric(23, 9, [&](const CyclicSubset& x) { seen.push_back(x); });
    std::sort(seen.begin(), seen.end(), [](const CyclicSubset& a, const CyclicSubset& b) { return a.mask() < b.mask(); });
    EXPECT_EQ(seen, gsdf::gen_symmetric(23, 9));
    EXPECT_EQ(seen.size(), gsdf::symmetric_count(23, 9));
}

TEST(Filter, Examples)
{
    EXPECT_TRUE(gsdf::psd_filter(S(7, {1, 2, 4}), 28.0, gsdf::gs_psd_slack(7)));
    EXPECT_FALSE(gsdf::psd_filter(S(7, {1, 2, 4}), 7.9, 0.0));
    for (int v : {3, 7, 25, 45}) EXPECT_TRUE(gsdf::psd_filter(CyclicSubset(v), gsdf::gs_psd_bound(v), gsdf::gs_psd_slack(v)));
}

// Pinned after an exhaustive DFT scan of gen_symmetric(25, 12): the first
// block by mask that breaks the 4v bound (max PSD about 253.6).
TEST(Filter, PinnedSymmetricBlockOrder25)
{
    const auto x = S(25, {7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18});
    ASSERT_TRUE(gsdf::is_symmetric(x));
    EXPECT_GT(max_nonzero_psd(x), 100.0);
    EXPECT_FALSE(gsdf::psd_filter(x, gsdf::gs_psd_bound(25), gsdf::gs_psd_slack(25)));

    std::size_t kept = 0;
    for (const auto& y : gsdf::gen_symmetric(25, 12)) {
        const bool ref = max_nonzero_psd(y) <= 100.0 + gsdf::gs_psd_slack(25);
        EXPECT_EQ(gsdf::psd_filter(y, 100.0, gsdf::gs_psd_slack(25)), ref) << y.to_string();
        kept += ref;
    }
    EXPECT_EQ(kept, 370u);
    EXPECT_EQ(gsdf::collect_rows(25, 12, BlockTag::symmetric).size(), 370u);
}

TEST(Rows, Examples)
{
    const auto skew = gsdf::collect_rows(7, 3, BlockTag::skew, {false, 1});
    EXPECT_EQ(skew.size(), 8u);
    EXPECT_FALSE(skew.bound.has_value());
    const auto it = std::find(skew.blocks.begin(), skew.blocks.end(), S(7, {1, 2, 4}));
    ASSERT_NE(it, skew.blocks.end());
    const auto r = skew.row(static_cast<std::size_t>(it - skew.blocks.begin()));
    EXPECT_EQ(std::vector<int>(r.begin(), r.end()), (std::vector<int>{1, 1, 1}));

    const auto one = gsdf::collect_rows(3, 1, BlockTag::symmetric, {false, 1});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.blocks[0], S(3, {0}));
    EXPECT_EQ(one.row(0)[0], 0);

    const auto none = gsdf::collect_rows(3, 0, BlockTag::symmetric, {false, 1});
    ASSERT_EQ(none.size(), 1u);
    EXPECT_TRUE(none.blocks[0].empty());
    EXPECT_EQ(none.row(0)[0], 0);
}

TEST(Rows, RejectsBadArguments)
{
    EXPECT_THROW(gsdf::collect_rows(7, 2, BlockTag::skew), gsdf::Error);
    EXPECT_THROW(gsdf::collect_rows(8, 3, BlockTag::symmetric), gsdf::Error);
    EXPECT_THROW(gsdf::collect_rows(7, 3, BlockTag::none), gsdf::Error);
}

TEST(Rows, IndependentOfJobs)
{
    for (int v : {15, 21, 27}) {
        EXPECT_EQ(gsdf::collect_rows(v, (v - 1) / 2, BlockTag::skew, {true, 1}),
                  gsdf::collect_rows(v, (v - 1) / 2, BlockTag::skew, {true, 4}));
        EXPECT_EQ(gsdf::collect_rows(v, v / 3, BlockTag::symmetric, {false, 1}),
                  gsdf::collect_rows(v, v / 3, BlockTag::symmetric, {false, 3}));
    }
}

TEST(Rows, CountsMatchOracle)
{
    const auto f = gsdf::collect_rows(13, 6, BlockTag::skew, {false, 1});
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto d = oracle::differences(f.blocks[i]);
        for (int c = 1; c <= 6; ++c) EXPECT_EQ(f.row(i)[static_cast<std::size_t>(c - 1)], d[static_cast<std::size_t>(c)]);
    }
}

TEST(RowFileFormat, RoundTrip)
{
    for (const auto& f : {gsdf::collect_rows(11, 5, BlockTag::skew), gsdf::collect_rows(11, 4, BlockTag::symmetric, {false, 1}),
                          gsdf::collect_rows(3, 0, BlockTag::symmetric)}) {
        std::ostringstream out;
        gsdf::write_row_file(out, f);
        std::istringstream in(out.str());
        EXPECT_EQ(gsdf::read_row_file(in), f);
    }
}

TEST(RowFileFormat, ErrorsCarryLineNumbers)
{
    auto fails_at = [](const std::string& text, const std::string& where) {
        std::istringstream in(text);
        try {
            gsdf::read_row_file(in, "f");
        } catch (const gsdf::Error& e) {
            EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
            return;
        }
        ADD_FAILURE() << "no error for:\n" << text;
    };
    fails_at("7 3 skew none\n1,2,4|1 1 1\n1,2|1 0 0\n", "f:3:");
    fails_at("7 3 skew none\n1,2,4|1 1 2\n", "f:2:");
    fails_at("7 3 skew none\n1,2,4|1 1 1\n1,2,4|1 1 1\n", "f:3:");
    fails_at("7 3 skew none\n0,1,6|1 0 1\n", "f:2:");
    fails_at("7 3 diagonal none\n", "f:1:");
    fails_at("8 3 skew none\n", "f:1:");
    fails_at("7 3 skew none\n1,2,x|1 1 1\n", "f:2:");
    fails_at("7 3 skew none\n1,2,4 1 1 1\n", "f:2:");
}
