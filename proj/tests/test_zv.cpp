#include "gsdf/zv.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using gsdf::CyclicSubset;

namespace {

CyclicSubset S(int v, std::initializer_list<int> el) { return CyclicSubset::from_elements(v, el); }

} // namespace

TEST(Subset, ElementsAndMask)
{
    const auto x = S(7, {4, 1, 2});
    EXPECT_EQ(x.mask(), 0b10110u);
    EXPECT_EQ(x.elements(), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(x.to_string(), "1,2,4");
    EXPECT_EQ(x.cardinality(), 3);
    EXPECT_TRUE(CyclicSubset(7).empty());
    EXPECT_EQ(CyclicSubset::full(3).elements(), (std::vector<int>{0, 1, 2}));
}

TEST(Subset, RejectsBadElements)
{
    EXPECT_THROW(S(7, {7}), gsdf::Error);
    EXPECT_THROW(S(7, {-1}), gsdf::Error);
    EXPECT_THROW(S(7, {1, 1}), gsdf::Error);
    EXPECT_THROW(CyclicSubset::from_mask(3, 0b1000), gsdf::Error);
    EXPECT_THROW(CyclicSubset(64), gsdf::Error);
}

TEST(Subset, Negate)
{
    EXPECT_EQ(gsdf::negate(S(7, {1, 2, 4})), S(7, {3, 5, 6}));
    EXPECT_EQ(gsdf::negate(CyclicSubset(7)), CyclicSubset(7));
    EXPECT_EQ(gsdf::negate(S(7, {0, 2, 5})), S(7, {0, 2, 5}));
}

TEST(Subset, Translate)
{
    EXPECT_EQ(gsdf::translate(S(3, {1}), 1), S(3, {2}));
    EXPECT_EQ(gsdf::translate(S(7, {1, 2, 4}), 0), S(7, {1, 2, 4}));
    EXPECT_EQ(gsdf::translate(S(7, {0, 3, 4}), 3), S(7, {0, 3, 6}));
}

TEST(Subset, Dilate)
{
    EXPECT_EQ(gsdf::dilate(S(3, {1}), 2), S(3, {2}));
    EXPECT_EQ(gsdf::dilate(S(7, {1, 2, 4}), 2), S(7, {1, 2, 4}));
    EXPECT_THROW(gsdf::dilate(S(9, {1}), 3), gsdf::Error);
    EXPECT_THROW(gsdf::dilate(S(9, {1}), 0), gsdf::Error);
}

TEST(Subset, SymmetricAndSkew)
{
    EXPECT_TRUE(gsdf::is_skew(S(7, {1, 2, 4})));
    EXPECT_FALSE(gsdf::is_symmetric(S(7, {1, 2, 4})));
    EXPECT_TRUE(gsdf::is_symmetric(S(7, {0, 2, 5})));
    EXPECT_FALSE(gsdf::is_skew(S(7, {0, 2, 5})));
    EXPECT_TRUE(gsdf::is_symmetric(S(7, {1, 6})));
    EXPECT_FALSE(gsdf::is_skew(S(7, {1, 6})));
    EXPECT_FALSE(gsdf::is_skew(S(7, {1, 2})));
    EXPECT_FALSE(gsdf::is_skew(S(8, {1, 2, 3})));
}

TEST(Subset, Complement)
{
    EXPECT_EQ(gsdf::complement(S(3, {1, 2})), S(3, {0}));
    EXPECT_EQ(gsdf::complement(CyclicSubset(3)), CyclicSubset::full(3));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto x = oracle::random_subset(1 + t % 40, rng);
        EXPECT_EQ(gsdf::complement(gsdf::complement(x)), x);
    }
}

TEST(Subset, Periodic)
{
    EXPECT_TRUE(gsdf::is_periodic(S(9, {0, 3, 6})));
    EXPECT_TRUE(gsdf::is_periodic(CyclicSubset(9)));
    EXPECT_FALSE(gsdf::is_periodic(S(9, {0, 3})));
}

TEST(Subset, UnitsAndInverses)
{
    EXPECT_EQ(gsdf::units(9), (std::vector<int>{1, 2, 4, 5, 7, 8}));
    EXPECT_EQ(gsdf::units(1), (std::vector<int>{0}));
    for (int v : {3, 7, 15, 33, 45})
        for (int u : gsdf::units(v)) EXPECT_EQ(u * gsdf::inverse_mod(u, v) % v, 1);
    EXPECT_THROW(gsdf::inverse_mod(3, 9), gsdf::Error);
}

TEST(DifferenceRow, Examples)
{
    EXPECT_EQ(gsdf::difference_row(S(7, {1, 2, 4})).counts, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(gsdf::difference_row(S(3, {1, 2})).counts, (std::vector<int>{1}));
    EXPECT_EQ(gsdf::difference_row(CyclicSubset(7)).counts, (std::vector<int>{0, 0, 0}));
    EXPECT_THROW(gsdf::difference_row(CyclicSubset(8)), gsdf::Error);
}

TEST(Correlation, Examples)
{
    EXPECT_EQ(gsdf::paf(S(7, {1, 2, 4})), (std::vector<int>{7, -1, -1, -1, -1, -1, -1}));
    const auto p = gsdf::psd(S(7, {1, 2, 4}));
    for (int j = 1; j < 7; ++j) EXPECT_NEAR(p[static_cast<std::size_t>(j)], 8.0, 1e-9);
    const auto e = gsdf::psd(CyclicSubset(7));
    EXPECT_NEAR(e[0], 49.0, 1e-9);
    for (int j = 1; j < 7; ++j) EXPECT_NEAR(e[static_cast<std::size_t>(j)], 0.0, 1e-9);
}

// Property suites over random subsets of every order up to 40.
class ZvProperties : public ::testing::TestWithParam<int> {};

TEST_P(ZvProperties, PafMatchesIntersectionFormula)
{
    const int v = GetParam();
    std::mt19937_64 rng(100 + static_cast<unsigned>(v));
    for (int t = 0; t < 50; ++t) {
        const auto x = oracle::random_subset(v, rng);
        const auto got = gsdf::paf(x);
        EXPECT_EQ(got, oracle::paf(x));
        for (int s = 0; s < v; ++s)
            EXPECT_EQ(got[static_cast<std::size_t>(s)], v - 4 * x.cardinality() + 4 * gsdf::intersection_count(x, s));
    }
}

TEST_P(ZvProperties, PsdAgreesWithDftAndParseval)
{
    const int v = GetParam();
    std::mt19937_64 rng(200 + static_cast<unsigned>(v));
    for (int t = 0; t < 30; ++t) {
        const auto x = oracle::random_subset(v, rng);
        const auto got = gsdf::psd(x);
        const auto ref = oracle::psd(x);
        double total = 0;
        for (int j = 0; j < v; ++j) {
            EXPECT_NEAR(got[static_cast<std::size_t>(j)], ref[static_cast<std::size_t>(j)], 1e-9 * v * v);
            total += got[static_cast<std::size_t>(j)];
        }
        EXPECT_NEAR(total, double(v) * v, 1e-6 * v * v);
        double maxj = 0;
        for (int j = 1; j < v; ++j) maxj = std::max(maxj, ref[static_cast<std::size_t>(j)]);
        if (v > 1) EXPECT_NEAR(gsdf::PsdTable(v).max_nonzero_frequency(x), maxj, 1e-9 * v * v);
    }
}

// rows are defined for odd orders only
class OddOrders : public ::testing::TestWithParam<int> {};

TEST_P(OddOrders, DifferenceRowMatchesPairs)
{
    const int v = GetParam();
    std::mt19937_64 rng(300 + static_cast<unsigned>(v));
    for (int t = 0; t < 50; ++t) {
        const auto x = oracle::random_subset(v, rng);
        const auto ref = oracle::differences(x);
        const auto row = gsdf::difference_row(x).counts;
        ASSERT_EQ(row.size(), static_cast<std::size_t>((v - 1) / 2));
        for (int d = 1; d <= (v - 1) / 2; ++d) {
            EXPECT_EQ(row[static_cast<std::size_t>(d - 1)], ref[static_cast<std::size_t>(d)]);
            EXPECT_EQ(ref[static_cast<std::size_t>(d)], ref[static_cast<std::size_t>(v - d)]);
        }
    }
}

TEST_P(ZvProperties, GroupActionInverses)
{
    const int v = GetParam();
    std::mt19937_64 rng(400 + static_cast<unsigned>(v));
    for (int t = 0; t < 30; ++t) {
        const auto x = oracle::random_subset(v, rng);
        EXPECT_EQ(gsdf::negate(gsdf::negate(x)), x);
        for (int g = 0; g < v; ++g) EXPECT_EQ(gsdf::translate(gsdf::translate(x, g), (v - g) % v), x);
        for (int u : gsdf::units(v)) {
            if (v == 1) continue;
            const auto y = gsdf::dilate(x, u);
            EXPECT_EQ(y, oracle::image(x, 1, u, 0));
            EXPECT_EQ(gsdf::dilate(y, gsdf::inverse_mod(u, v)), x);
            EXPECT_EQ(gsdf::is_symmetric(y), gsdf::is_symmetric(x));
            EXPECT_EQ(gsdf::is_skew(y), gsdf::is_skew(x));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, ZvProperties, ::testing::Range(1, 41));
INSTANTIATE_TEST_SUITE_P(Orders, OddOrders, ::testing::Range(1, 41, 2));

TEST(Zv, NegationOfSkew)
{
    for (int v = 1; v <= 21; v += 2)
        for (const auto& x : oracle::subsets(v, [](const CyclicSubset& s) { return gsdf::is_skew(s); })) {
            const auto y = gsdf::negate(x);
            EXPECT_TRUE(gsdf::is_skew(y)) << v;
            EXPECT_EQ(y.mask() & x.mask(), 0u) << v;
            EXPECT_EQ(y.cardinality() + x.cardinality(), v - 1) << v;
        }
}
