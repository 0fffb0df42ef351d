#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gsdf {

/// (v; k1, k2, k3, k4; lambda). Complementing a block can leave the sizes
/// unordered; such sets are kept as-is and flagged by is_normalized().
struct GsParamSet {
    int v = 0;
    std::array<int, 4> k{};
    int lambda = 0;

    /// sum k_i (k_i - 1) == lambda (v - 1)
    bool satisfies_lambda_equation() const;
    /// sum k_i == lambda + v
    bool satisfies_sum_equation() const;
    /// sum (v - 2 k_i)^2 == 4v
    bool satisfies_square_equation() const;
    bool is_valid() const
    {
        return lambda >= 0 && satisfies_lambda_equation() && satisfies_sum_equation() && satisfies_square_equation();
    }
    /// v/2 >= k1 >= k2 >= k3 >= k4 >= 0
    bool is_normalized() const;

    std::string to_string() const;

    bool operator==(const GsParamSet&) const = default;
    auto operator<=>(const GsParamSet&) const = default;
};

enum class BlockTag { skew, symmetric, none };

char tag_letter(BlockTag t);

/// Positional skew/symmetric pattern of a family, written as four letters
/// from {k, s}. The canonical patterns are ksss, kkss and kkks.
struct SymmetryType {
    std::array<BlockTag, 4> tags{};

    static SymmetryType ksss() { return parse("ksss"); }
    static SymmetryType kkss() { return parse("kkss"); }
    static SymmetryType kkks() { return parse("kkks"); }
    /// Accepts any 4-letter k/s pattern with at least one of each letter.
    static SymmetryType parse(std::string_view text);

    int skew_count() const;
    std::string to_string() const;

    bool operator==(const SymmetryType&) const = default;
};

/// All normalized GS-parameter sets of order v, in decreasing lexicographic
/// order of (k1, k2, k3, k4). Built from the decompositions of 4v (odd v)
/// or v (even v) into four squares.
std::vector<GsParamSet> enumerate_param_sets(int v);

/// The subset of enumerate_param_sets(v) with k1 = (v-1)/2: the only sets
/// that can carry a skew block. Rejects even v.
std::vector<GsParamSet> skew_compatible_param_sets(int v);

/// Sets with k1 = (v-1)/2 (every one admits the ksss pattern). Rejects even v.
std::vector<GsParamSet> ksss_param_sets(int v);

/// Sets with k1 = k2 = (v-1)/2, one per representation 2v-1 = r^2 + s^2 with
/// r > s >= 0. Rejects even v.
std::vector<GsParamSet> kkss_param_sets(int v);

/// The unique set with k1 = k2 = k3 = (v-1)/2, present iff 4v-3 is an odd
/// square. Rejects even v.
std::optional<GsParamSet> kkks_param_set(int v);

/// Parameter sets that fit the given pattern's skew positions.
std::vector<GsParamSet> param_sets_for_type(int v, const SymmetryType& type);

/// True when the skew positions of `type` all have size (v-1)/2.
bool type_fits(const GsParamSet& p, const SymmetryType& type);

/// Replaces k_i by v - k_i and lambda by lambda + (v - 2 k_i); 0-based index.
/// The result is not re-sorted.
GsParamSet complement_params(const GsParamSet& p, int index);

/// Complements every block with k_i > v/2 and sorts the sizes decreasingly.
GsParamSet normalize(const GsParamSet& p);

} // namespace gsdf
