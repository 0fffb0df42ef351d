#include "gsdf/equivalence.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace gsdf {

namespace {

int tag_rank(BlockTag t)
{
    switch (t) {
    case BlockTag::skew: return 0;
    case BlockTag::symmetric: return 1;
    case BlockTag::none: return 2;
    }
    return 3;
}

void check_index(int i)
{
    if (i < 0 || i > 3) throw Error("block index " + std::to_string(i) + " outside 0..3");
}

CanonicalKey make_key(int v, std::array<KeyBlock, 4> blocks)
{
    std::sort(blocks.begin(), blocks.end(), [](const KeyBlock& a, const KeyBlock& b) { return compare_blocks(a, b) < 0; });
    return CanonicalKey{v, blocks};
}

void check_same_parameters(const TypedFamily& a, const TypedFamily& b)
{
    const auto pa = normalize(a.params);
    const auto pb = normalize(b.params);
    if (pa != pb) throw Error("families have different parameter sets " + pa.to_string() + " and " + pb.to_string());
}

template <class KeyFn>
std::vector<EquivalenceClass> partition(const std::vector<TypedFamily>& fs, KeyFn&& key_of)
{
    for (std::size_t i = 1; i < fs.size(); ++i) check_same_parameters(fs[0], fs[i]);
    std::map<CanonicalKey, EquivalenceClass> groups;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto key = key_of(fs[i]);
        auto [it, inserted] = groups.try_emplace(key);
        auto& cls = it->second;
        if (inserted) {
            cls.key = key;
            cls.representative = i;
        } else if (sorted_key(fs[i]) < sorted_key(fs[cls.representative])) {
            cls.representative = i;
        }
        cls.members.push_back(i);
    }
    std::vector<EquivalenceClass> out;
    out.reserve(groups.size());
    for (auto& [key, cls] : groups) out.push_back(std::move(cls));
    return out;
}

} // namespace

TypedFamily apply_transform(const TypedFamily& f, const Transform& t)
{
    auto blocks = f.blocks;
    auto params = f.params;
    std::visit(
        [&](const auto& op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, Translate>) {
                check_index(op.block);
                blocks[static_cast<std::size_t>(op.block)] = translate(blocks[static_cast<std::size_t>(op.block)], op.shift);
            } else if constexpr (std::is_same_v<T, Negate>) {
                check_index(op.block);
                blocks[static_cast<std::size_t>(op.block)] = negate(blocks[static_cast<std::size_t>(op.block)]);
            } else if constexpr (std::is_same_v<T, Dilate>) {
                for (auto& b : blocks) b = dilate(b, op.unit);
            } else {
                check_index(op.first);
                check_index(op.second);
                auto& x = blocks[static_cast<std::size_t>(op.first)];
                auto& y = blocks[static_cast<std::size_t>(op.second)];
                if (x.cardinality() != y.cardinality()) throw Error("exchange needs blocks of equal size");
                std::swap(x, y);
            }
        },
        t);
    return TypedFamily::make(params, blocks);
}

std::strong_ordering compare_blocks(const KeyBlock& a, const KeyBlock& b)
{
    if (auto c = b.set.cardinality() <=> a.set.cardinality(); c != 0) return c;
    if (auto c = tag_rank(a.tag) <=> tag_rank(b.tag); c != 0) return c;
    return lex_compare(a.set, b.set);
}

std::strong_ordering CanonicalKey::operator<=>(const CanonicalKey& other) const
{
    if (auto c = v <=> other.v; c != 0) return c;
    for (std::size_t i = 0; i < 4; ++i)
        if (auto c = compare_blocks(blocks[i], other.blocks[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::string CanonicalKey::to_string() const
{
    std::string s = std::to_string(v) + ":";
    for (const auto& b : blocks) s += " " + std::string(1, tag_letter(b.tag)) + "[" + b.set.to_string() + "]";
    return s;
}

CanonicalKey sorted_key(const TypedFamily& f)
{
    std::array<KeyBlock, 4> blocks;
    for (std::size_t i = 0; i < 4; ++i) blocks[i] = {f.blocks[i], f.tags[i]};
    return make_key(f.order(), blocks);
}

CanonicalKey canonical_form(const TypedFamily& f)
{
    if (!f.is_typed()) throw Error("canonical form needs every block skew or symmetric");
    const int v = f.order();
    std::optional<CanonicalKey> best;
    for (int u : units(v)) {
        std::array<KeyBlock, 4> chosen;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto image = dilate(f.blocks[i], u);
            std::optional<KeyBlock> least;
            for (const auto& base : {image, negate(image)})
                for (int g = 0; g < v; ++g) {
                    const auto moved = translate(base, g);
                    const auto tag = tag_of(moved);
                    if (tag == BlockTag::none) continue;
                    KeyBlock kb{moved, tag};
                    if (!least || compare_blocks(kb, *least) < 0) least = kb;
                }
            chosen[i] = *least;
        }
        auto key = make_key(v, chosen);
        if (!best || key < *best) best = key;
    }
    return *best;
}

CanonicalKey small_canonical_form(const TypedFamily& f)
{
    const int v = f.order();
    std::optional<CanonicalKey> best;
    for (int u : units(v)) {
        std::array<KeyBlock, 4> blocks;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto image = dilate(f.blocks[i], u);
            blocks[i] = {image, tag_of(image)};
        }
        auto key = make_key(v, blocks);
        if (!best || key < *best) best = key;
    }
    return *best;
}

bool are_equivalent(const TypedFamily& a, const TypedFamily& b)
{
    check_same_parameters(a, b);
    return canonical_form(a) == canonical_form(b);
}

std::vector<EquivalenceClass> classify(const std::vector<TypedFamily>& fs)
{
    return partition(fs, [](const TypedFamily& f) { return canonical_form(f); });
}

std::vector<EquivalenceClass> small_classes(const std::vector<TypedFamily>& fs)
{
    return partition(fs, [](const TypedFamily& f) { return small_canonical_form(f); });
}

} // namespace gsdf
