#pragma once

/**
 * @file search.hpp
 * @brief End-to-end exhaustive search for one order and symmetry pattern:
 * parameter sets, row files, matching, classification and verification.
 */

#include "gsdf/catalog.hpp"
#include "gsdf/equivalence.hpp"
#include "gsdf/matcher.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace gsdf {

struct SearchOptions {
    bool filter = true;
    std::uint64_t threshold = 10'000'000;
    int jobs = 1;
};

struct ParamSearchResult {
    GsParamSet params;
    SymmetryType type;
    /// Rows kept per block after generation (and filtering).
    std::array<std::size_t, 4> row_counts{};
    std::size_t top_level_cases = 0;
    std::vector<TypedFamily> families;
    std::vector<EquivalenceClass> classes;
    std::vector<EquivalenceClass> small;
    /// Every family passed the difference-family and GS-matrix checks.
    bool verified = true;
};

struct SearchReport {
    int v = 0;
    SymmetryType type;
    std::vector<ParamSearchResult> results;

    bool found() const;
    std::size_t class_count() const;
    std::size_t small_class_count() const;
};

/// Exhaustive search of a single parameter set. The pattern must fit.
ParamSearchResult search_param_set(const GsParamSet& p, const SymmetryType& type, const SearchOptions& options = {});
/// All parameter sets of order v that fit the pattern.
SearchReport search(int v, const SymmetryType& type, const SearchOptions& options = {});

/// Verdict for one table row and one pattern, recomputed by search.
Verdict recompute_verdict(const GsParamSet& p, const SymmetryType& type, const SearchOptions& options = {});

void write_report(std::ostream& out, const SearchReport& report);

} // namespace gsdf
