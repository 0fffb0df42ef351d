#pragma once

#include "gsdf/params.hpp"
#include "gsdf/zv.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gsdf {

/// skew, symmetric, or none (v > 1 keeps the first two exclusive).
BlockTag tag_of(const CyclicSubset& x);

/// Four base blocks with their parameter set and per-block symmetry tags.
struct TypedFamily {
    GsParamSet params;
    std::array<CyclicSubset, 4> blocks;
    std::array<BlockTag, 4> tags{};

    /// Tags are computed from the blocks; sizes must match params.k.
    static TypedFamily make(const GsParamSet& params, const std::array<CyclicSubset, 4>& blocks);

    int order() const { return params.v; }
    /// True when every block is skew or symmetric.
    bool is_typed() const;
    /// Throws when some block is untyped.
    SymmetryType type() const;

    bool operator==(const TypedFamily&) const = default;
};

/// Family file record:
///   v k1 k2 k3 k4 lambda type
///   four lines of comma-separated residues (an empty line is the empty set)
/// Lines starting with '#' are comments.
void write_family(std::ostream& out, const TypedFamily& f);
void write_families(std::ostream& out, const std::vector<TypedFamily>& fs);
std::vector<TypedFamily> read_families(std::istream& in, const std::string& source = "<stream>");
TypedFamily read_family(std::istream& in, const std::string& source = "<stream>");

void save_families(const std::filesystem::path& path, const std::vector<TypedFamily>& fs);
std::vector<TypedFamily> load_families(const std::filesystem::path& path);

} // namespace gsdf
