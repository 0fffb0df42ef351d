#include "gsdf/family.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gsdf {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what)
{
    throw Error(source + ":" + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int to_int(std::string_view text, const std::string& source, std::size_t line)
{
    text = trim(text);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail(source, line, "expected an integer, got '" + std::string(text) + "'");
    return value;
}

/// Accepts "1,2,4", "[1,2,4]" and "[1,2,4]," (the appendix style).
std::vector<int> parse_residues(std::string_view text, const std::string& source, std::size_t line)
{
    text = trim(text);
    if (!text.empty() && text.back() == '.') text.remove_suffix(1);
    if (!text.empty() && text.back() == ',') text.remove_suffix(1);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') fail(source, line, "unbalanced brackets");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<int> out;
    text = trim(text);
    while (!text.empty()) {
        const auto comma = text.find(',');
        out.push_back(to_int(text.substr(0, comma), source, line));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

bool is_comment(std::string_view line)
{
    line = trim(line);
    return !line.empty() && line.front() == '#';
}

} // namespace

BlockTag tag_of(const CyclicSubset& x)
{
    if (is_skew(x)) return BlockTag::skew;
    if (is_symmetric(x)) return BlockTag::symmetric;
    return BlockTag::none;
}

TypedFamily TypedFamily::make(const GsParamSet& params, const std::array<CyclicSubset, 4>& blocks)
{
    TypedFamily f;
    f.params = params;
    f.blocks = blocks;
    for (std::size_t i = 0; i < 4; ++i) {
        if (blocks[i].order() != params.v) throw Error("block " + std::to_string(i + 1) + " lives in the wrong group");
        if (blocks[i].cardinality() != params.k[i])
            throw Error("block " + std::to_string(i + 1) + " has " + std::to_string(blocks[i].cardinality()) + " elements, expected " + std::to_string(params.k[i]));
        f.tags[i] = tag_of(blocks[i]);
    }
    return f;
}

bool TypedFamily::is_typed() const
{
    for (auto t : tags)
        if (t == BlockTag::none) return false;
    return true;
}

SymmetryType TypedFamily::type() const
{
    if (!is_typed()) throw Error("family has a block that is neither skew nor symmetric");
    SymmetryType t;
    t.tags = tags;
    return t;
}

void write_family(std::ostream& out, const TypedFamily& f)
{
    const auto& p = f.params;
    out << p.v << ' ' << p.k[0] << ' ' << p.k[1] << ' ' << p.k[2] << ' ' << p.k[3] << ' ' << p.lambda << ' ' << f.type().to_string() << '\n';
    for (const auto& b : f.blocks) out << b.to_string() << '\n';
}

void write_families(std::ostream& out, const std::vector<TypedFamily>& fs)
{
    for (const auto& f : fs) write_family(out, f);
}

std::vector<TypedFamily> read_families(std::istream& in, const std::string& source)
{
    std::vector<TypedFamily> out;
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::string& into) {
        while (std::getline(in, into)) {
            ++lineno;
            if (!is_comment(into)) return true;
        }
        return false;
    };
    while (next_line(line)) {
        if (trim(line).empty()) continue;
        const std::size_t header_line = lineno;
        std::istringstream header(line);
        std::vector<std::string> fields;
        for (std::string tok; header >> tok;) fields.push_back(tok);
        if (fields.size() != 7) fail(source, header_line, "header must be 'v k1 k2 k3 k4 lambda type'");
        GsParamSet p;
        p.v = to_int(fields[0], source, header_line);
        if (p.v < 1 || p.v > max_order) fail(source, header_line, "v outside [1, 63]");
        for (std::size_t i = 0; i < 4; ++i) p.k[i] = to_int(fields[i + 1], source, header_line);
        p.lambda = to_int(fields[5], source, header_line);
        SymmetryType declared;
        try {
            declared = SymmetryType::parse(fields[6]);
        } catch (const Error& e) {
            fail(source, header_line, e.what());
        }
        std::array<CyclicSubset, 4> blocks;
        std::array<std::size_t, 4> block_lines{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (!next_line(line)) fail(source, lineno + 1, "expected block " + std::to_string(i + 1));
            block_lines[i] = lineno;
            try {
                const auto residues = parse_residues(line, source, lineno);
                blocks[i] = CyclicSubset::from_elements(p.v, residues);
            } catch (const Error& e) {
                const std::string what = e.what();
                if (what.rfind(source + ":", 0) == 0) throw;
                fail(source, lineno, what);
            }
        }
        TypedFamily f;
        try {
            f = TypedFamily::make(p, blocks);
        } catch (const Error& e) {
            fail(source, header_line, e.what());
        }
        for (std::size_t i = 0; i < 4; ++i)
            if (f.tags[i] != declared.tags[i])
                fail(source, block_lines[i],
                     "block " + std::to_string(i + 1) + " contradicts declared type " + declared.to_string() + " (expected " +
                         (declared.tags[i] == BlockTag::skew ? "skew" : "symmetric") + ")");
        out.push_back(f);
    }
    return out;
}

TypedFamily read_family(std::istream& in, const std::string& source)
{
    auto fs = read_families(in, source);
    if (fs.size() != 1) throw Error(source + ": expected exactly one family, found " + std::to_string(fs.size()));
    return fs.front();
}

void save_families(const std::filesystem::path& path, const std::vector<TypedFamily>& fs)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_families(out, fs);
    if (!out) throw Error("write failed: " + path.string());
}

std::vector<TypedFamily> load_families(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return read_families(in, path.string());
}

} // namespace gsdf
