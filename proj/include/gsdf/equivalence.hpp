#pragma once

/**
 * @file equivalence.hpp
 * @brief Equivalence of GS-difference families and class enumeration.
 *
 * The elementary transformations (per-block translation, per-block negation,
 * simultaneous multiplication by a unit, exchange of equal-size blocks)
 * generate the group of maps X_i -> e_i * u * X_p(i) + g_i. Two families are
 * equivalent iff they lie in one orbit of that group.
 *
 * A canonical key is the minimum, over the typed members of the orbit, of
 * the family's blocks sorted by (size descending, tag, elements). Because
 * the blocks are sorted inside the key, the minimum factors: for each unit
 * u, each block independently takes its least typed image e*u*X + g.
 */

#include "gsdf/family.hpp"

#include <compare>
#include <variant>
#include <vector>

namespace gsdf {

struct Translate {
    int block;
    int shift;
};
struct Negate {
    int block;
};
struct Dilate {
    int unit;
};
struct Exchange {
    int first;
    int second;
};
using Transform = std::variant<Translate, Negate, Dilate, Exchange>;

/// Block indices are 0-based. Tags are recomputed, so translations may
/// produce untyped blocks. Throws on a non-unit multiplier or an exchange of
/// blocks with different sizes.
TypedFamily apply_transform(const TypedFamily& f, const Transform& t);

struct KeyBlock {
    CyclicSubset set;
    BlockTag tag = BlockTag::none;
};

/// Ordering: larger blocks first, then skew before symmetric, then the
/// lexicographic order of the element lists.
std::strong_ordering compare_blocks(const KeyBlock& a, const KeyBlock& b);

struct CanonicalKey {
    int v = 0;
    std::array<KeyBlock, 4> blocks;

    std::strong_ordering operator<=>(const CanonicalKey& other) const;
    bool operator==(const CanonicalKey& other) const { return (*this <=> other) == 0; }
    std::string to_string() const;
};

/// The blocks of f sorted as in a key, without any transformation.
CanonicalKey sorted_key(const TypedFamily& f);

/// Orbit minimum under the full group. Requires every block to be typed.
CanonicalKey canonical_form(const TypedFamily& f);

/// Orbit minimum under simultaneous multiplication by units only, with the
/// blocks treated as an unordered collection.
CanonicalKey small_canonical_form(const TypedFamily& f);

/// Throws when the two families have different parameter sets (compared
/// after normalization).
bool are_equivalent(const TypedFamily& a, const TypedFamily& b);

struct EquivalenceClass {
    CanonicalKey key;
    /// Index of the member whose sorted_key is least.
    std::size_t representative = 0;
    /// Indices into the classified list, increasing.
    std::vector<std::size_t> members;

    std::size_t size() const { return members.size(); }
};

/// Partition by canonical_form, ordered by key. All families must share one
/// normalized parameter set.
std::vector<EquivalenceClass> classify(const std::vector<TypedFamily>& fs);

/// Partition by small_canonical_form, ordered by key.
std::vector<EquivalenceClass> small_classes(const std::vector<TypedFamily>& fs);

} // namespace gsdf
