#pragma once

/**
 * @file blockgen.hpp
 * @brief Candidate block generation (the data collection phase).
 *
 * Symmetric blocks are unions of pairs {i, -i}, plus {0} when the size is
 * odd. Skew blocks pick one residue from every pair. Each block that passes
 * the PSD bound is stored next to its difference multiplicities.
 */

#include "gsdf/params.hpp"
#include "gsdf/zv.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace gsdf {

std::uint64_t binomial(int n, int r);

/// Number of symmetric k-subsets of Z_v (v odd).
std::uint64_t symmetric_count(int v, int k);
/// 2^((v-1)/2).
std::uint64_t skew_count(int v);

/// Visits every symmetric k-subset of Z_v once, in no particular order.
/// gen_symmetric returns them sorted by mask.
void for_each_symmetric(int v, int k, const std::function<void(const CyclicSubset&)>& visit);
std::vector<CyclicSubset> gen_symmetric(int v, int k);

/// Visits every skew subset of Z_v once; gen_skew sorts by mask.
void for_each_skew(int v, const std::function<void(const CyclicSubset&)>& visit);
std::vector<CyclicSubset> gen_skew(int v);

/// max_{j != 0} PSD(j) <= bound + eps.
bool psd_filter(const CyclicSubset& x, double bound, double eps);
bool psd_filter(const PsdTable& table, const CyclicSubset& x, double bound, double eps);

/// The bound used by GS searches: 4v, with slack 1e-6 * 4v on the accepting side.
inline double gs_psd_bound(int v) { return 4.0 * v; }
inline double gs_psd_slack(int v) { return 1e-6 * 4.0 * v; }

std::string kind_name(BlockTag kind);
BlockTag parse_kind(std::string_view text);

/// One phase-one output file: every surviving block with its multiplicities.
struct RowFile {
    int v = 0;
    int k = 0;
    BlockTag kind = BlockTag::symmetric;
    /// Empty when the PSD filter was off.
    std::optional<double> bound;
    std::vector<CyclicSubset> blocks;
    /// Row-major, width() entries per block.
    std::vector<std::uint8_t> counts;

    int width() const { return (v - 1) / 2; }
    std::size_t size() const { return blocks.size(); }
    std::span<const std::uint8_t> row(std::size_t i) const
    {
        return {counts.data() + i * static_cast<std::size_t>(width()), static_cast<std::size_t>(width())};
    }
    void push_back(const CyclicSubset& block);

    bool operator==(const RowFile&) const = default;
};

struct CollectOptions {
    bool filter = true;
    int jobs = 1;
};

/// Generates all blocks of the requested kind and size, keeps those passing
/// the filter, and returns them sorted by mask. For kind == skew, k must be
/// (v-1)/2.
RowFile collect_rows(int v, int k, BlockTag kind, const CollectOptions& options = {});

void write_row_file(std::ostream& out, const RowFile& file);
/// `source` names the stream in error messages.
RowFile read_row_file(std::istream& in, const std::string& source = "<stream>");
void save_row_file(const std::filesystem::path& path, const RowFile& file);
RowFile load_row_file(const std::filesystem::path& path);

} // namespace gsdf
