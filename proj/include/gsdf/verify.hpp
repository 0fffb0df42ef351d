#pragma once

/**
 * @file verify.hpp
 * @brief Exact certification of families and the matrices built from them.
 *
 * All checks use dense integer matrices; the largest array is 4v x 4v with
 * v < 64, so plain O(n^3) products are fine.
 */

#include "gsdf/family.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

namespace gsdf {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    static IntMatrix identity(int n, int scale = 1);

    int size() const { return n_; }
    int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool is_symmetric() const { return *this == transpose(); }
    /// Every entry is +1 or -1.
    bool is_plus_minus_one() const;

    bool operator==(const IntMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<int> a_;
};

/// entry(i, j) = row[(j - i) mod v]
IntMatrix circulant(const BinarySeq& first_row);
inline IntMatrix circulant(const CyclicSubset& x) { return circulant(BinarySeq::from_subset(x)); }

/// entry(i, j) = row[(i + j) mod v]
IntMatrix back_circulant(const BinarySeq& first_row);
/// The back-circulant equal to circulant(x) * R.
IntMatrix back_circulant(const CyclicSubset& x);

/// The back-circulant identity R (ones on the anti-diagonal).
IntMatrix back_identity(int v);

struct DifferenceFamilyReport {
    /// Common value of the difference sums, when there is one.
    std::optional<int> lambda;
    /// sums[c] for c = 0..v-1 (sums[0] is unused and left 0).
    std::vector<int> sums;
    /// Residues c != 0 whose sum differs from the declared lambda.
    std::vector<int> offending;

    bool ok() const { return lambda.has_value(); }
};

/// Counts, for every c != 0, the ordered pairs (a, b) in some block with a - b = c.
DifferenceFamilyReport is_difference_family(const TypedFamily& f);

/// sum_i A_i^T A_i == 4v I, exactly.
bool check_gs_matrices(const std::array<IntMatrix, 4>& a);
std::array<IntMatrix, 4> family_circulants(const TypedFamily& f);

/// The 4v x 4v array assembled from Z0..Z3.
IntMatrix build_gs_array(const std::array<IntMatrix, 4>& z);
inline IntMatrix build_gs_array(const TypedFamily& f) { return build_gs_array(family_circulants(f)); }

bool is_hadamard(const IntMatrix& h);
/// Hadamard and H + H^T == 2I.
bool is_skew_hadamard(const IntMatrix& h);

/// M1 skew type (M1 + M1^T = 2I), M2..M4 symmetric, all six pairs amicable
/// (M N^T = N M^T), and sum M_i M_i^T == 4v I.
bool are_good_matrices(const std::array<IntMatrix, 4>& m);

/// Builds A1 = circulant(X1) and B_i = circulant(X_i) R for i = 2..4 and
/// checks them as good matrices. Throws unless the tags are exactly ksss.
bool check_good_matrices(const TypedFamily& f);
/// Throws unless the tags are exactly kkss.
bool check_g_matrices(const TypedFamily& f);
/// Throws unless the tags are exactly kkks.
bool check_best_matrices(const TypedFamily& f);

/// Full certificate of one family, as used by `verify` and `catalog verify-all`.
struct Certificate {
    bool difference_family = false; ///< sums equal the declared lambda
    bool gs_matrices = false;
    bool hadamard = false;
    /// Checked only when the first block is skew; otherwise left true.
    bool skew_hadamard = true;
    /// Good, G- or best matrices for ksss, kkss, kkks; other patterns skip it.
    bool typed_matrices = true;

    bool ok() const { return difference_family && gs_matrices && hadamard && skew_hadamard && typed_matrices; }
};

Certificate certify(const TypedFamily& f);

/// 4v lines of '+'/'-' characters.
void write_hadamard(std::ostream& out, const IntMatrix& h);

} // namespace gsdf
