#pragma once

/**
 * @file zv.hpp
 * @brief Subsets of the cyclic group Z_v and their correlation data.
 *
 * A subset is stored as a bitmask of width v (v <= 63), so translation is a
 * rotation and intersection counts are a single popcount. Everything here is
 * a pure function on values.
 */

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsdf {

/// Largest supported group order.
inline constexpr int max_order = 63;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rotation of the low v bits of `mask` towards higher residues by `g`.
constexpr std::uint64_t rotate_mask(std::uint64_t mask, int v, int g)
{
    if (g == 0 || mask == 0) return mask;
    const std::uint64_t full = (v == 64) ? ~0ULL : ((1ULL << v) - 1);
    return ((mask << g) | (mask >> (v - g))) & full;
}

int gcd(int a, int b);
/// Inverse of u modulo v; throws if gcd(u, v) != 1.
int inverse_mod(int u, int v);
/// All units of Z_v in increasing order.
std::vector<int> units(int v);
inline int mod(long long a, int v)
{
    long long r = a % v;
    return static_cast<int>(r < 0 ? r + v : r);
}

class CyclicSubset {
public:
    CyclicSubset() = default;
    /// Empty subset of Z_v.
    explicit CyclicSubset(int v);

    static CyclicSubset from_mask(int v, std::uint64_t mask);
    /// Elements must lie in [0, v) without repetition (order is free).
    static CyclicSubset from_elements(int v, std::span<const int> elements);
    static CyclicSubset from_elements(int v, std::initializer_list<int> elements)
    {
        return from_elements(v, std::span<const int>(elements.begin(), elements.size()));
    }
    static CyclicSubset full(int v);

    int order() const { return v_; }
    std::uint64_t mask() const { return mask_; }
    int cardinality() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int e) const { return e >= 0 && e < v_ && ((mask_ >> e) & 1U); }
    std::vector<int> elements() const;

    /// Comma-separated element list, e.g. "1,2,4" ("" for the empty set).
    std::string to_string() const;

    bool operator==(const CyclicSubset&) const = default;

private:
    CyclicSubset(int v, std::uint64_t mask) : v_(v), mask_(mask) {}

    int v_ = 1;
    std::uint64_t mask_ = 0;
};

/// Lexicographic comparison of the increasing element lists.
std::strong_ordering lex_compare(const CyclicSubset& a, const CyclicSubset& b);

/// The +-1 sequence of a subset: entry i is -1 iff i is in X.
struct BinarySeq {
    int v = 0;
    std::vector<int> entries;

    static BinarySeq from_subset(const CyclicSubset& x);
    CyclicSubset to_subset() const;
};

/// Multiplicities of the differences d = 1..(v-1)/2 inside one subset.
struct DifferenceRow {
    int v = 0;
    std::vector<int> counts;

    bool operator==(const DifferenceRow&) const = default;
};

CyclicSubset negate(const CyclicSubset& x);
CyclicSubset translate(const CyclicSubset& x, int g);
/// Image under multiplication by a unit; throws for gcd(u, v) != 1.
CyclicSubset dilate(const CyclicSubset& x, int u);
CyclicSubset complement(const CyclicSubset& x);

bool is_symmetric(const CyclicSubset& x);
/// v odd, |X| = (v-1)/2 and X disjoint from -X.
bool is_skew(const CyclicSubset& x);
/// True iff X + h = X for some h != 0.
bool is_periodic(const CyclicSubset& x);

/// |X intersect (X + s)|.
int intersection_count(const CyclicSubset& x, int s);

/// Rejects even v.
DifferenceRow difference_row(const CyclicSubset& x);

/// Periodic autocorrelation of the +-1 sequence, exact.
std::vector<int> paf(const CyclicSubset& x);
/// Squared DFT magnitudes of the +-1 sequence, j = 0..v-1.
std::vector<double> psd(const CyclicSubset& x);

/// Cosine table for PSD evaluation at a fixed order, computed from the PAF.
class PsdTable {
public:
    explicit PsdTable(int v);

    int order() const { return v_; }
    std::vector<double> evaluate(const CyclicSubset& x) const;
    /// max over j = 1..v-1 of PSD(j).
    double max_nonzero_frequency(const CyclicSubset& x) const;

private:
    int v_;
    std::vector<double> cosines_;
};

} // namespace gsdf
