#pragma once

/**
 * @file matcher.hpp
 * @brief Matching phase: quadruples of rows whose column sums all equal lambda.
 *
 * bins_match splits the four files by the value of one column at a time.
 * A case fixes one value per file for every binned column, with the four
 * values summing to lambda. Once the two pairwise products of the case's
 * file sizes (smallest with largest, the middle two together) both fall
 * below the threshold, the case is solved by a meet-in-the-middle join.
 */

#include "gsdf/blockgen.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace gsdf {

using FileSet = std::array<const RowFile*, 4>;
using Quadruple = std::array<CyclicSubset, 4>;

struct MatchCase {
    /// Index of the last binned column (0-based).
    int depth = 0;
    /// The (n1, n2, n3, n4) fixed for each binned column 0..depth.
    std::vector<std::array<int, 4>> prefix_sums;
    /// Row indices into the four input files.
    std::array<std::vector<std::uint32_t>, 4> rows;
};

struct MatchResult {
    int v = 0;
    int lambda = 0;
    /// Number of cases at the first column; zero means no solution is possible.
    std::size_t top_level_cases = 0;
    /// Sorted by the masks of the four blocks.
    std::vector<Quadruple> quadruples;

    bool empty() const { return quadruples.empty(); }
};

struct MatchOptions {
    std::uint64_t threshold = 10'000'000;
    int jobs = 1;
};

/// Exhaustive four-fold loop. Refuses inputs whose size product exceeds `guard`.
MatchResult brute_force_match(const FileSet& files, int lambda, std::uint64_t guard = 100'000'000);

/// All cases at the first column, in increasing (n1, n2, n3, n4) order.
std::vector<MatchCase> match_cases(const FileSet& files, int lambda);

MatchResult bins_match(const FileSet& files, int lambda, const MatchOptions& options = {});

} // namespace gsdf
