#include "gsdf/blockgen.hpp"

#include "gsdf/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace gsdf {

namespace {

void require_odd(int v)
{
    if (v < 3 || v % 2 == 0 || v > max_order) throw Error("block generation needs odd 3 <= v <= " + std::to_string(max_order) + ", got " + std::to_string(v));
}

// Pair p (1-based) is {p, v - p}; choice bit p-1 refers to it.
std::uint64_t pair_mask(int v, int p) { return (1ULL << p) | (1ULL << (v - p)); }

template <class Fn>
void for_each_combination(int n, int r, Fn&& fn)
{
    if (r < 0 || r > n) return;
    if (r == 0) {
        fn(0ULL);
        return;
    }
    std::uint64_t c = (1ULL << r) - 1;
    const std::uint64_t limit = 1ULL << n;
    while (c < limit) {
        fn(c);
        const std::uint64_t low = c & (~c + 1);
        const std::uint64_t ripple = c + low;
        c = ripple | (((ripple ^ c) >> 2) / low);
    }
}

// Generation is split by the values of the top `prefix_bits` choice positions.
struct Partition {
    int v;
    int pairs;
    int prefix_bits;

    std::size_t tasks() const { return std::size_t{1} << prefix_bits; }
    int low_bits() const { return pairs - prefix_bits; }
};

Partition make_partition(int v)
{
    const int pairs = (v - 1) / 2;
    return Partition{v, pairs, std::min(pairs, 8)};
}

template <class Fn>
void visit_skew_task(const Partition& part, std::size_t task, Fn&& fn)
{
    const int v = part.v;
    const int low = part.low_bits();
    const std::uint64_t prefix = static_cast<std::uint64_t>(task) << low;
    const std::uint64_t count = 1ULL << low;
    for (std::uint64_t c = 0; c < count; ++c) {
        const std::uint64_t choice = prefix | c;
        std::uint64_t m = 0;
        for (int p = 1; p <= part.pairs; ++p) m |= ((choice >> (p - 1)) & 1U) ? (1ULL << (v - p)) : (1ULL << p);
        fn(CyclicSubset::from_mask(v, m));
    }
}

template <class Fn>
void visit_symmetric_task(const Partition& part, int k, std::size_t task, Fn&& fn)
{
    const int v = part.v;
    const int low = part.low_bits();
    const std::uint64_t prefix = static_cast<std::uint64_t>(task) << low;
    const int remaining = k / 2 - std::popcount(prefix);
    const std::uint64_t zero = (k % 2 == 1) ? 1ULL : 0ULL;
    for_each_combination(low, remaining, [&](std::uint64_t c) {
        const std::uint64_t choice = prefix | c;
        std::uint64_t m = zero;
        for (std::uint64_t rest = choice; rest != 0; rest &= rest - 1) m |= pair_mask(v, std::countr_zero(rest) + 1);
        fn(CyclicSubset::from_mask(v, m));
    });
}

std::string format_bound(double b)
{
    if (b == std::floor(b) && std::abs(b) < 1e15) return std::to_string(static_cast<long long>(b));
    std::ostringstream os;
    os << std::setprecision(17) << b;
    return os.str();
}

[[noreturn]] void parse_failure(const std::string& source, std::size_t line, const std::string& what)
{
    throw Error(source + ":" + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view text, const std::string& source, std::size_t line)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) parse_failure(source, line, "expected an integer, got '" + std::string(text) + "'");
    return value;
}

} // namespace

std::uint64_t binomial(int n, int r)
{
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return out;
}

std::uint64_t symmetric_count(int v, int k)
{
    if (v % 2 == 0 || k < 0 || k > v) return 0;
    return binomial((v - 1) / 2, k / 2);
}

std::uint64_t skew_count(int v) { return (v % 2 == 0) ? 0 : 1ULL << ((v - 1) / 2); }

void for_each_symmetric(int v, int k, const std::function<void(const CyclicSubset&)>& visit)
{
    require_odd(v);
    if (k < 0 || k > v) throw Error("symmetric block size " + std::to_string(k) + " outside [0, " + std::to_string(v) + "]");
    const auto part = make_partition(v);
    for (std::size_t t = 0; t < part.tasks(); ++t) visit_symmetric_task(part, k, t, visit);
}

std::vector<CyclicSubset> gen_symmetric(int v, int k)
{
    std::vector<CyclicSubset> out;
    for_each_symmetric(v, k, [&](const CyclicSubset& x) { out.push_back(x); });
    std::sort(out.begin(), out.end(), [](const CyclicSubset& a, const CyclicSubset& b) { return a.mask() < b.mask(); });
    return out;
}

void for_each_skew(int v, const std::function<void(const CyclicSubset&)>& visit)
{
    require_odd(v);
    const auto part = make_partition(v);
    for (std::size_t t = 0; t < part.tasks(); ++t) visit_skew_task(part, t, visit);
}

std::vector<CyclicSubset> gen_skew(int v)
{
    std::vector<CyclicSubset> out;
    out.reserve(skew_count(v));
    for_each_skew(v, [&](const CyclicSubset& x) { out.push_back(x); });
    std::sort(out.begin(), out.end(), [](const CyclicSubset& a, const CyclicSubset& b) { return a.mask() < b.mask(); });
    return out;
}

bool psd_filter(const PsdTable& table, const CyclicSubset& x, double bound, double eps)
{
    return table.max_nonzero_frequency(x) <= bound + eps;
}

bool psd_filter(const CyclicSubset& x, double bound, double eps) { return psd_filter(PsdTable(x.order()), x, bound, eps); }

std::string kind_name(BlockTag kind)
{
    switch (kind) {
    case BlockTag::skew: return "skew";
    case BlockTag::symmetric: return "symmetric";
    case BlockTag::none: break;
    }
    throw Error("row files hold skew or symmetric blocks only");
}

BlockTag parse_kind(std::string_view text)
{
    if (text == "skew" || text == "k") return BlockTag::skew;
    if (text == "symmetric" || text == "s") return BlockTag::symmetric;
    throw Error("unknown block kind '" + std::string(text) + "' (expected skew or symmetric)");
}

void RowFile::push_back(const CyclicSubset& block)
{
    blocks.push_back(block);
    for (int c : difference_row(block).counts) counts.push_back(static_cast<std::uint8_t>(c));
}

RowFile collect_rows(int v, int k, BlockTag kind, const CollectOptions& options)
{
    require_odd(v);
    if (kind == BlockTag::skew && k != (v - 1) / 2)
        throw Error("skew blocks of Z_" + std::to_string(v) + " have size " + std::to_string((v - 1) / 2) + ", not " + std::to_string(k));
    if (kind == BlockTag::none) throw Error("block kind must be skew or symmetric");
    if (k < 0 || k > v) throw Error("block size " + std::to_string(k) + " outside [0, " + std::to_string(v) + "]");

    const PsdTable table(v);
    const double bound = gs_psd_bound(v);
    const double eps = gs_psd_slack(v);
    const auto part = make_partition(v);
    std::vector<std::vector<CyclicSubset>> found(part.tasks());
    parallel_for(part.tasks(), options.jobs, [&](std::size_t t) {
        auto keep = [&](const CyclicSubset& x) {
            if (!options.filter || psd_filter(table, x, bound, eps)) found[t].push_back(x);
        };
        if (kind == BlockTag::skew)
            visit_skew_task(part, t, keep);
        else
            visit_symmetric_task(part, k, t, keep);
    });

    std::vector<CyclicSubset> all;
    for (auto& chunk : found) all.insert(all.end(), chunk.begin(), chunk.end());
    std::sort(all.begin(), all.end(), [](const CyclicSubset& a, const CyclicSubset& b) { return a.mask() < b.mask(); });

    RowFile file;
    file.v = v;
    file.k = k;
    file.kind = kind;
    if (options.filter) file.bound = bound;
    file.blocks.reserve(all.size());
    file.counts.reserve(all.size() * static_cast<std::size_t>(file.width()));
    for (const auto& x : all) file.push_back(x);
    return file;
}

void write_row_file(std::ostream& out, const RowFile& file)
{
    out << file.v << ' ' << file.k << ' ' << kind_name(file.kind) << ' ' << (file.bound ? format_bound(*file.bound) : "none") << '\n';
    for (std::size_t i = 0; i < file.size(); ++i) {
        out << file.blocks[i].to_string() << '|';
        const auto r = file.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) out << ' ';
            out << static_cast<int>(r[j]);
        }
        out << '\n';
    }
}

RowFile read_row_file(std::istream& in, const std::string& source)
{
    std::string line;
    if (!std::getline(in, line)) parse_failure(source, 1, "missing header");
    std::istringstream header(line);
    std::string v_text, k_text, kind_text, bound_text, extra;
    if (!(header >> v_text >> k_text >> kind_text >> bound_text) || (header >> extra))
        parse_failure(source, 1, "header must be 'v k kind bound'");
    RowFile file;
    file.v = parse_int(v_text, source, 1);
    file.k = parse_int(k_text, source, 1);
    if (file.v < 3 || file.v % 2 == 0 || file.v > max_order) parse_failure(source, 1, "v must be odd and in [3, 63]");
    try {
        file.kind = parse_kind(kind_text);
    } catch (const Error& e) {
        parse_failure(source, 1, e.what());
    }
    if (bound_text != "none") {
        try {
            file.bound = std::stod(bound_text);
        } catch (const std::exception&) {
            parse_failure(source, 1, "bad bound '" + bound_text + "'");
        }
    }
    const int width = file.width();
    std::size_t lineno = 1;
    std::uint64_t previous = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto bar = line.find('|');
        if (bar == std::string::npos) parse_failure(source, lineno, "missing '|' separator");
        std::vector<int> elems;
        std::string_view block_text(line.data(), bar);
        while (!block_text.empty()) {
            const auto comma = block_text.find(',');
            elems.push_back(parse_int(block_text.substr(0, comma), source, lineno));
            if (comma == std::string_view::npos) break;
            block_text.remove_prefix(comma + 1);
        }
        CyclicSubset block;
        try {
            block = CyclicSubset::from_elements(file.v, elems);
        } catch (const Error& e) {
            parse_failure(source, lineno, e.what());
        }
        if (block.cardinality() != file.k) parse_failure(source, lineno, "block has " + std::to_string(block.cardinality()) + " elements, header says " + std::to_string(file.k));
        const bool kind_ok = (file.kind == BlockTag::skew) ? is_skew(block) : is_symmetric(block);
        if (!kind_ok) parse_failure(source, lineno, "block is not " + kind_name(file.kind));
        if (!file.blocks.empty() && block.mask() <= previous) parse_failure(source, lineno, "rows are not in increasing block order");
        previous = block.mask();

        std::istringstream rest(line.substr(bar + 1));
        std::vector<int> counts;
        std::string tok;
        while (rest >> tok) counts.push_back(parse_int(tok, source, lineno));
        if (static_cast<int>(counts.size()) != width) parse_failure(source, lineno, "expected " + std::to_string(width) + " multiplicities");
        file.push_back(block);
        const auto stored = file.row(file.size() - 1);
        for (int j = 0; j < width; ++j)
            if (stored[static_cast<std::size_t>(j)] != counts[static_cast<std::size_t>(j)])
                parse_failure(source, lineno, "multiplicities do not match the block");
    }
    return file;
}

void save_row_file(const std::filesystem::path& path, const RowFile& file)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_row_file(out, file);
    if (!out) throw Error("write failed: " + path.string());
}

RowFile load_row_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return read_row_file(in, path.string());
}

} // namespace gsdf
