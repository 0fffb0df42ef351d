#include "gsdf/catalog.hpp"
#include "gsdf/search.hpp"
#include "gsdf/verify.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using gsdf::CyclicSubset;
using gsdf::IntMatrix;
using gsdf::TypedFamily;

namespace {

CyclicSubset S(int v, std::initializer_list<int> el) { return CyclicSubset::from_elements(v, el); }

IntMatrix all_plus(int v)
{
    IntMatrix m(v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) m(i, j) = 1;
    return m;
}

const gsdf::GsParamSet p3{3, {1, 1, 1, 0}, 0};

} // namespace

TEST(DifferenceFamily, Examples)
{
    const auto a = TypedFamily::make({3, {1, 1, 2, 0}, 1}, {S(3, {1}), S(3, {1}), S(3, {1, 2}), CyclicSubset(3)});
    auto r = gsdf::is_difference_family(a);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(*r.lambda, 1);
    EXPECT_TRUE(r.offending.empty());

    const auto b = TypedFamily::make({7, {3, 3, 3, 1}, 3}, {S(7, {1, 2, 4}), S(7, {1, 2, 4}), S(7, {1, 2, 4}), S(7, {0})});
    r = gsdf::is_difference_family(b);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(*r.lambda, 3);

    EXPECT_EQ(*gsdf::is_difference_family(gsdf::catalog_entry("43-kkks-a").family).lambda, 35);

    // declared lambda off by one: constant sums, every residue offends
    const auto c = TypedFamily::make({7, {3, 3, 3, 1}, 4}, b.blocks);
    r = gsdf::is_difference_family(c);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.offending.size(), 6u);

    const auto d = TypedFamily::make({7, {3, 3, 3, 1}, 3}, {S(7, {1, 2, 3}), S(7, {1, 2, 4}), S(7, {1, 2, 4}), S(7, {0})});
    EXPECT_FALSE(gsdf::is_difference_family(d).ok());
}

TEST(GsMatrices, Examples)
{
    const auto f = TypedFamily::make(p3, {S(3, {1}), S(3, {0}), S(3, {0}), CyclicSubset(3)});
    const auto z = gsdf::family_circulants(f);
    IntMatrix sum(3);
    for (const auto& m : z) sum = sum + m.transpose() * m;
    EXPECT_EQ(sum, IntMatrix::identity(3, 12));
    EXPECT_TRUE(gsdf::check_gs_matrices(z));
    EXPECT_FALSE(gsdf::check_gs_matrices({all_plus(3), all_plus(3), all_plus(3), all_plus(3)}));
    EXPECT_TRUE(gsdf::check_gs_matrices(gsdf::family_circulants(gsdf::catalog_entry("45-kkss-a").family)));
}

TEST(GsArray, Examples)
{
    const auto f = TypedFamily::make({3, {1, 1, 2, 0}, 1}, {S(3, {1}), S(3, {1}), S(3, {1, 2}), CyclicSubset(3)});
    const auto h = gsdf::build_gs_array(f);
    EXPECT_EQ(h.size(), 12);
    EXPECT_EQ(h * h.transpose(), IntMatrix::identity(12, 12));
    EXPECT_TRUE(gsdf::is_hadamard(h));

    const auto& e = gsdf::catalog_entry("43-kkks-a").family;
    const auto h172 = gsdf::build_gs_array(e);
    EXPECT_EQ(h172.size(), 172);
    EXPECT_TRUE(gsdf::is_hadamard(h172));
    EXPECT_TRUE(gsdf::is_skew_hadamard(h172));

    auto z = gsdf::family_circulants(e);
    z[2] = all_plus(43);
    EXPECT_FALSE(gsdf::is_hadamard(gsdf::build_gs_array(z)));
}

TEST(TypedMatrices, Examples)
{
    const auto f = TypedFamily::make(p3, {S(3, {1}), S(3, {0}), S(3, {0}), CyclicSubset(3)});
    EXPECT_TRUE(gsdf::check_good_matrices(f));

    // A1 symmetric instead of skew
    const auto r = oracle::exchange(3);
    const auto sym = gsdf::circulant(S(3, {0}));
    EXPECT_FALSE(gsdf::are_good_matrices({sym, sym * r, sym * r, gsdf::circulant(CyclicSubset(3)) * r}));

    EXPECT_TRUE(gsdf::check_good_matrices(gsdf::catalog_entry("45-ksss-a").family));
    EXPECT_TRUE(gsdf::check_g_matrices(gsdf::catalog_entry("41-kkss-a").family));
    EXPECT_TRUE(gsdf::check_best_matrices(gsdf::catalog_entry("43-kkks-a").family));
    EXPECT_THROW(gsdf::check_best_matrices(gsdf::catalog_entry("43-ksss-a").family), gsdf::Error);
    EXPECT_THROW(gsdf::check_good_matrices(gsdf::catalog_entry("43-kkks-a").family), gsdf::Error);
}

// The alternative construction: B_i is the back-circulant with the first
// row of A_i. Entry (i, j) of circulant(Y) R is y[v - 1 - i - j], so that
// matrix is circulant(-X - 1) R, a translate of the A_i R form.
TEST(TypedMatrices, AlternativeBackCirculantIdentity)
{
    const auto& f = gsdf::catalog_entry("43-ksss-a").family;
    const int v = f.order();
    const auto r = oracle::exchange(v);
    std::array<IntMatrix, 4> alt;
    alt[0] = gsdf::circulant(f.blocks[0]);
    for (std::size_t i = 1; i < 4; ++i) {
        const auto row = gsdf::BinarySeq::from_subset(f.blocks[i]);
        alt[i] = gsdf::back_circulant(row);
        for (int j = 0; j < v; ++j) EXPECT_EQ(alt[i](0, j), gsdf::circulant(f.blocks[i])(0, j));
        EXPECT_EQ(alt[i], gsdf::circulant(gsdf::translate(gsdf::negate(f.blocks[i]), v - 1)) * r);
        EXPECT_TRUE(alt[i].is_symmetric());
    }
    EXPECT_TRUE(gsdf::are_good_matrices(alt));
}

TEST(Matrices, BackCirculantIsCirculantTimesR)
{
    std::mt19937_64 rng(5);
    for (int v = 1; v <= 15; ++v) {
        const auto r = oracle::exchange(v);
        EXPECT_EQ(gsdf::back_identity(v), r);
        for (int t = 0; t < 20; ++t) {
            const auto x = oracle::random_subset(v, rng);
            const auto b = gsdf::back_circulant(x);
            EXPECT_EQ(b, gsdf::circulant(x) * r);
            EXPECT_TRUE(b.is_symmetric());
        }
    }
}

TEST(Matrices, SkewBlockIffSkewTypeCirculant)
{
    for (int v = 3; v <= 13; v += 2)
        for (const auto& x : oracle::subsets(v, [](const CyclicSubset&) { return true; })) {
            const auto a = gsdf::circulant(x);
            EXPECT_EQ(gsdf::is_skew(x), a + a.transpose() == IntMatrix::identity(v, 2)) << x.to_string();
        }
}

// Exact difference sums equal lambda iff Eq (5) holds, for random typed quadruples.
TEST(Matrices, DifferenceFamilyIffGsMatrices)
{
    std::mt19937_64 rng(99);
    int positives = 0;
    for (int v = 3; v <= 9; v += 2)
        for (const auto& p : gsdf::enumerate_param_sets(v)) {
            for (int t = 0; t < 300; ++t) {
                std::array<CyclicSubset, 4> b;
                for (std::size_t i = 0; i < 4; ++i) b[i] = oracle::random_subset(v, p.k[i], rng);
                const auto f = TypedFamily::make(p, b);
                const auto df = gsdf::is_difference_family(f);
                const bool exact = df.ok() && *df.lambda == p.lambda;
                EXPECT_EQ(exact, oracle::is_difference_family(b, p.lambda));
                EXPECT_EQ(exact, gsdf::check_gs_matrices(gsdf::family_circulants(f))) << p.to_string();
                positives += exact;
            }
            if (!gsdf::type_fits(p, gsdf::SymmetryType::ksss())) continue;
            for (const auto& f : gsdf::search_param_set(p, gsdf::SymmetryType::ksss()).families) {
                EXPECT_TRUE(gsdf::check_gs_matrices(gsdf::family_circulants(f)));
                EXPECT_TRUE(gsdf::is_hadamard(gsdf::build_gs_array(f)));
                ++positives;
            }
        }
    EXPECT_GT(positives, 0);
}

TEST(Certificate, CatalogEntriesPass)
{
    for (const auto& e : gsdf::catalog()) {
        const auto c = gsdf::certify(e.family);
        EXPECT_TRUE(c.ok()) << e.label;
        EXPECT_TRUE(gsdf::is_hadamard(gsdf::build_gs_array(e.family))) << e.label;
    }
}

TEST(Hadamard, WriterUsesPlusMinus)
{
    const auto f = TypedFamily::make(p3, {S(3, {1}), S(3, {0}), S(3, {0}), CyclicSubset(3)});
    std::ostringstream out;
    gsdf::write_hadamard(out, gsdf::build_gs_array(f));
    const auto text = out.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
    EXPECT_EQ(text.find_first_not_of("+-\n"), std::string::npos);
    EXPECT_EQ(text.substr(0, 13), "+-+++-++-+++\n");
}
