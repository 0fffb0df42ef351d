#include "gsdf/matcher.hpp"

#include "gsdf/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gsdf {

namespace {

void check_files(const FileSet& files)
{
    for (const auto* f : files)
        if (f == nullptr) throw Error("matching needs four row files");
    const int v = files[0]->v;
    for (const auto* f : files)
        if (f->v != v) throw Error("row files disagree on v");
}

bool mask_less(const Quadruple& a, const Quadruple& b)
{
    for (std::size_t i = 0; i < 4; ++i)
        if (a[i].mask() != b[i].mask()) return a[i].mask() < b[i].mask();
    return false;
}

std::uint64_t splitmix(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Linear row hash: h(row) = sum_j row[j] * weight[j] (mod 2^64), so the
/// hash of a sum of rows is the sum of their hashes.
class RowHasher {
public:
    explicit RowHasher(int width)
    {
        std::uint64_t state = 0x5eed5eed5eedULL;
        weights_.resize(static_cast<std::size_t>(width));
        for (auto& w : weights_) w = splitmix(state) | 1U;
    }

    std::uint64_t operator()(std::span<const std::uint8_t> row) const
    {
        std::uint64_t h = 0;
        for (std::size_t j = 0; j < row.size(); ++j) h += row[j] * weights_[j];
        return h;
    }

    std::uint64_t constant(int value) const
    {
        std::uint64_t h = 0;
        for (auto w : weights_) h += static_cast<std::uint64_t>(value) * w;
        return h;
    }

private:
    std::vector<std::uint64_t> weights_;
};

struct Matcher {
    FileSet files;
    int lambda;
    int width;
    std::uint64_t threshold;
    RowHasher hasher;
    std::array<std::vector<std::uint64_t>, 4> hashes;

    Matcher(const FileSet& f, int lam, std::uint64_t thr) : files(f), lambda(lam), width(f[0]->width()), threshold(thr), hasher(width)
    {
        for (std::size_t t = 0; t < 4; ++t) {
            hashes[t].resize(files[t]->size());
            for (std::size_t i = 0; i < files[t]->size(); ++i) hashes[t][i] = hasher(files[t]->row(i));
        }
    }

    std::uint8_t value(std::size_t file, std::uint32_t row, int column) const
    {
        return files[file]->counts[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(column)];
    }

    bool matches(const std::array<std::uint32_t, 4>& r) const
    {
        for (int j = 0; j < width; ++j) {
            int s = 0;
            for (std::size_t t = 0; t < 4; ++t) s += value(t, r[t], j);
            if (s != lambda) return false;
        }
        return true;
    }

    Quadruple blocks(const std::array<std::uint32_t, 4>& r) const
    {
        return {files[0]->blocks[r[0]], files[1]->blocks[r[1]], files[2]->blocks[r[2]], files[3]->blocks[r[3]]};
    }

    /// Splits `rows` by the value of `column` and returns every case whose
    /// four values sum to lambda.
    std::vector<MatchCase> split(const MatchCase& parent, int column) const
    {
        std::array<std::map<int, std::vector<std::uint32_t>>, 4> bins;
        for (std::size_t t = 0; t < 4; ++t)
            for (auto r : parent.rows[t]) bins[t][value(t, r, column)].push_back(r);
        std::vector<MatchCase> out;
        for (const auto& [n1, r1] : bins[0])
            for (const auto& [n2, r2] : bins[1])
                for (const auto& [n3, r3] : bins[2]) {
                    const int n4 = lambda - n1 - n2 - n3;
                    const auto it = bins[3].find(n4);
                    if (it == bins[3].end()) continue;
                    MatchCase c;
                    c.depth = column;
                    c.prefix_sums = parent.prefix_sums;
                    c.prefix_sums.push_back({n1, n2, n3, n4});
                    c.rows = {r1, r2, r3, it->second};
                    out.push_back(std::move(c));
                }
        return out;
    }

    void solve(const MatchCase& c, std::vector<Quadruple>& out) const
    {
        std::array<std::size_t, 4> order{0, 1, 2, 3};
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return c.rows[x].size() < c.rows[y].size(); });
        const auto size_of = [&](std::size_t pos) { return static_cast<std::uint64_t>(c.rows[order[pos]].size()); };
        if (size_of(0) == 0) return;
        const bool small = size_of(0) * size_of(3) < threshold && size_of(1) * size_of(2) < threshold;
        if (small) {
            join(c, {order[0], order[3]}, {order[1], order[2]}, out);
            return;
        }
        if (c.depth + 1 >= width) {
            // Every column is fixed: the whole product matches.
            product(c, out);
            return;
        }
        for (const auto& sub : split(c, c.depth + 1)) solve(sub, out);
    }

    void product(const MatchCase& c, std::vector<Quadruple>& out) const
    {
        for (auto r0 : c.rows[0])
            for (auto r1 : c.rows[1])
                for (auto r2 : c.rows[2])
                    for (auto r3 : c.rows[3]) out.push_back(blocks({r0, r1, r2, r3}));
    }

    struct PairEntry {
        std::uint64_t hash;
        std::uint32_t first;
        std::uint32_t second;
    };

    /// Meet in the middle: rows of pair `left` summed against lambda minus
    /// rows of pair `right`. The smaller pair product is materialized.
    void join(const MatchCase& c, std::array<std::size_t, 2> left, std::array<std::size_t, 2> right, std::vector<Quadruple>& out) const
    {
        const auto product_size = [&](const std::array<std::size_t, 2>& p) { return c.rows[p[0]].size() * c.rows[p[1]].size(); };
        if (product_size(right) > product_size(left)) std::swap(left, right);
        // `right` is the materialized side.
        std::vector<PairEntry> table;
        table.reserve(product_size(right));
        for (auto x : c.rows[right[0]])
            for (auto y : c.rows[right[1]]) table.push_back({hashes[right[0]][x] + hashes[right[1]][y], x, y});
        std::sort(table.begin(), table.end(), [](const PairEntry& a, const PairEntry& b) { return a.hash < b.hash; });

        const std::uint64_t target = hasher.constant(lambda);
        std::array<std::uint32_t, 4> rows{};
        for (auto x : c.rows[left[0]])
            for (auto y : c.rows[left[1]]) {
                const std::uint64_t want = target - hashes[left[0]][x] - hashes[left[1]][y];
                auto it = std::lower_bound(table.begin(), table.end(), want, [](const PairEntry& e, std::uint64_t h) { return e.hash < h; });
                for (; it != table.end() && it->hash == want; ++it) {
                    rows[left[0]] = x;
                    rows[left[1]] = y;
                    rows[right[0]] = it->first;
                    rows[right[1]] = it->second;
                    if (matches(rows)) out.push_back(blocks(rows));
                }
            }
    }
};

MatchCase root_case(const FileSet& files)
{
    MatchCase root;
    root.depth = -1;
    for (std::size_t t = 0; t < 4; ++t) {
        root.rows[t].resize(files[t]->size());
        std::iota(root.rows[t].begin(), root.rows[t].end(), 0U);
    }
    return root;
}

} // namespace

MatchResult brute_force_match(const FileSet& files, int lambda, std::uint64_t guard)
{
    check_files(files);
    std::uint64_t total = 1;
    for (const auto* f : files) {
        total *= std::max<std::uint64_t>(f->size(), 1);
        if (total > guard) throw Error("brute-force matching refused: size product exceeds " + std::to_string(guard));
    }
    const int width = files[0]->width();
    MatchResult result;
    result.v = files[0]->v;
    result.lambda = lambda;
    for (std::size_t a = 0; a < files[0]->size(); ++a)
        for (std::size_t b = 0; b < files[1]->size(); ++b)
            for (std::size_t c = 0; c < files[2]->size(); ++c)
                for (std::size_t d = 0; d < files[3]->size(); ++d) {
                    bool ok = true;
                    for (int j = 0; j < width && ok; ++j) {
                        const auto col = static_cast<std::size_t>(j);
                        ok = files[0]->row(a)[col] + files[1]->row(b)[col] + files[2]->row(c)[col] + files[3]->row(d)[col] == lambda;
                    }
                    if (ok) result.quadruples.push_back({files[0]->blocks[a], files[1]->blocks[b], files[2]->blocks[c], files[3]->blocks[d]});
                }
    std::sort(result.quadruples.begin(), result.quadruples.end(), mask_less);
    result.top_level_cases = match_cases(files, lambda).size();
    return result;
}

std::vector<MatchCase> match_cases(const FileSet& files, int lambda)
{
    check_files(files);
    const Matcher m(files, lambda, 0);
    if (m.width == 0) return {};
    return m.split(root_case(files), 0);
}

MatchResult bins_match(const FileSet& files, int lambda, const MatchOptions& options)
{
    check_files(files);
    MatchResult result;
    result.v = files[0]->v;
    result.lambda = lambda;
    const Matcher m(files, lambda, options.threshold);
    if (m.width == 0) return result;
    const auto cases = m.split(root_case(files), 0);
    result.top_level_cases = cases.size();
    std::vector<std::vector<Quadruple>> found(cases.size());
    parallel_for(cases.size(), options.jobs, [&](std::size_t i) { m.solve(cases[i], found[i]); });
    for (auto& chunk : found) result.quadruples.insert(result.quadruples.end(), chunk.begin(), chunk.end());
    std::sort(result.quadruples.begin(), result.quadruples.end(), mask_less);
    return result;
}

} // namespace gsdf
