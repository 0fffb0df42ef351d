#include "gsdf/matcher.hpp"

#include "matcher_instances.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using gsdf::BlockTag;
using gsdf::CyclicSubset;

namespace {

CyclicSubset S(int v, std::initializer_list<int> el) { return CyclicSubset::from_elements(v, el); }

struct Files {
    std::array<gsdf::RowFile, 4> f;
    gsdf::FileSet set() const { return {&f[0], &f[1], &f[2], &f[3]}; }
};

Files typed_files(const gsdf::GsParamSet& p, const gsdf::SymmetryType& t, bool filter = false)
{
    Files out;
    for (std::size_t i = 0; i < 4; ++i) out.f[i] = gsdf::collect_rows(p.v, p.k[i], t.tags[i], {filter, 1});
    return out;
}

gsdf::RowFile from_rows(int v, int k, BlockTag kind, std::vector<CyclicSubset> blocks)
{
    gsdf::RowFile f;
    f.v = v;
    f.k = k;
    f.kind = kind;
    for (const auto& b : blocks) f.push_back(b);
    return f;
}

} // namespace

TEST(Matcher, QuadraticResidueFamilyOrder7)
{
    const auto files = typed_files({7, {3, 3, 3, 1}, 3}, gsdf::SymmetryType::kkks());
    const auto brute = gsdf::brute_force_match(files.set(), 3);
    const gsdf::Quadruple qr{S(7, {1, 2, 4}), S(7, {1, 2, 4}), S(7, {1, 2, 4}), S(7, {0})};
    EXPECT_NE(std::find(brute.quadruples.begin(), brute.quadruples.end(), qr), brute.quadruples.end());
    EXPECT_EQ(gsdf::bins_match(files.set(), 3).quadruples, brute.quadruples);
    for (const auto& q : brute.quadruples) EXPECT_TRUE(oracle::is_difference_family(q, 3));

    const auto cases = gsdf::match_cases(files.set(), 3);
    bool has_1110 = false;
    for (const auto& c : cases) has_1110 |= (c.prefix_sums.front() == std::array<int, 4>{1, 1, 1, 0});
    EXPECT_TRUE(has_1110);
}

TEST(Matcher, ImpossibleLambda)
{
    const auto files = typed_files({7, {3, 3, 3, 1}, 3}, gsdf::SymmetryType::kkks());
    const auto r = gsdf::bins_match(files.set(), 99);
    EXPECT_TRUE(r.empty());
    EXPECT_EQ(r.top_level_cases, 0u);
    EXPECT_TRUE(gsdf::brute_force_match(files.set(), 99).empty());
}

TEST(Matcher, Order13KkssHasNoSolution)
{
    const auto files = typed_files({13, {6, 6, 6, 3}, 8}, gsdf::SymmetryType::kkss());
    EXPECT_TRUE(gsdf::bins_match(files.set(), 8).empty());
    EXPECT_TRUE(gsdf::brute_force_match(files.set(), 8).empty());
}

TEST(Matcher, CasesOverBinaryColumn)
{
    // Column-0 values {0, 1} in every file; lambda 3 leaves four cases.
    const int v = 5;
    auto sym = from_rows(v, 2, BlockTag::symmetric, {S(v, {1, 4}), S(v, {2, 3})});
    Files files{{sym, sym, sym, sym}};
    EXPECT_EQ(sym.row(0)[0], 0);
    EXPECT_EQ(sym.row(1)[0], 1);
    const auto cases = gsdf::match_cases(files.set(), 3);
    ASSERT_EQ(cases.size(), 4u);
    for (const auto& c : cases) {
        const auto& s = c.prefix_sums.front();
        EXPECT_EQ(s[0] + s[1] + s[2] + s[3], 3);
    }
}

TEST(Matcher, EmptyFileGivesNoCases)
{
    auto files = typed_files({7, {3, 3, 3, 1}, 3}, gsdf::SymmetryType::kkks());
    files.f[2] = from_rows(7, 3, BlockTag::skew, {});
    EXPECT_TRUE(gsdf::match_cases(files.set(), 3).empty());
    EXPECT_TRUE(gsdf::bins_match(files.set(), 3).empty());
}

TEST(Matcher, CasesPartitionAllQuadruples)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto in = instances::random_instance(rng);
        const auto cases = gsdf::match_cases(in.set(), in.lambda);
        // every row quadruple whose column-0 values sum to lambda lies in exactly one case
        std::size_t covered = 0;
        for (const auto& c : cases) {
            std::size_t prod = 1;
            for (const auto& r : c.rows) prod *= r.size();
            covered += prod;
            for (std::size_t i = 0; i < 4; ++i)
                for (auto row : c.rows[i]) EXPECT_EQ(in.files[i].row(row)[0], c.prefix_sums.front()[i]);
        }
        std::size_t expected = 0;
        for (std::size_t a = 0; a < in.files[0].size(); ++a)
            for (std::size_t b = 0; b < in.files[1].size(); ++b)
                for (std::size_t c = 0; c < in.files[2].size(); ++c)
                    for (std::size_t d = 0; d < in.files[3].size(); ++d)
                        expected += in.files[0].row(a)[0] + in.files[1].row(b)[0] + in.files[2].row(c)[0] + in.files[3].row(d)[0] ==
                                    in.lambda;
        EXPECT_EQ(covered, expected);
    }
}

TEST(Matcher, RandomInstancesAgreeWithBruteForce)
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 60; ++t) {
        const auto in = instances::random_instance(rng);
        const auto brute = gsdf::brute_force_match(in.set(), in.lambda);
        for (std::uint64_t threshold : {1ULL, 10ULL, 10'000'000ULL})
            for (int jobs : {1, 4}) {
                const auto got = gsdf::bins_match(in.set(), in.lambda, {threshold, jobs});
                EXPECT_EQ(got.quadruples, brute.quadruples)
                    << in.params.to_string() << ' ' << in.type.to_string() << " threshold=" << threshold << " jobs=" << jobs;
            }
        for (const auto& q : brute.quadruples) EXPECT_TRUE(oracle::is_difference_family(q, in.lambda));
    }
}

TEST(Matcher, BruteForceGuard)
{
    const auto files = typed_files({13, {6, 6, 6, 3}, 8}, gsdf::SymmetryType::kkks());
    EXPECT_THROW(gsdf::brute_force_match(files.set(), 8, 10), gsdf::Error);
}

TEST(Matcher, RejectsMixedOrders)
{
    const auto a = gsdf::collect_rows(7, 3, BlockTag::skew);
    const auto b = gsdf::collect_rows(9, 4, BlockTag::skew);
    EXPECT_THROW(gsdf::bins_match({&a, &a, &a, &b}, 3), gsdf::Error);
}
