#include "gsdf/catalog.hpp"

#include <sstream>

namespace gsdf {

namespace detail {
extern const char* const catalog_text;
extern const char* const table1_text;
} // namespace detail

namespace {

std::vector<CatalogEntry> parse_catalog()
{
    std::istringstream in(detail::catalog_text);
    std::vector<CatalogEntry> out;
    std::string line;
    std::string note;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            note = line.substr(line.find_first_not_of("# "));
            continue;
        }
        std::istringstream header(line);
        std::string label;
        header >> label;
        std::string rest;
        std::getline(header, rest);
        std::string record = rest + "\n";
        for (int i = 0; i < 4; ++i) {
            std::string block;
            if (!std::getline(in, block)) throw Error("embedded catalog truncated at " + label);
            record += block + "\n";
        }
        std::istringstream family_in(record);
        out.push_back(CatalogEntry{label, read_family(family_in, "catalog:" + label), note});
        note.clear();
    }
    return out;
}

std::vector<Table1Row> parse_table()
{
    std::istringstream in(detail::table1_text);
    std::vector<Table1Row> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        Table1Row row;
        fields >> row.params.v >> row.params.k[0] >> row.params.k[1] >> row.params.k[2] >> row.params.k[3] >> row.params.lambda;
        for (auto& verdict : row.verdicts) {
            std::string word;
            fields >> word;
            if (word == "yes")
                verdict = Verdict::yes;
            else if (word == "no")
                verdict = Verdict::no;
            else if (word == "x")
                verdict = Verdict::not_applicable;
            else
                throw Error("bad verdict '" + word + "' in embedded table");
        }
        if (!fields) throw Error("malformed embedded table row: " + line);
        out.push_back(row);
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = parse_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view label)
{
    for (const auto& e : catalog())
        if (e.label == label) return e;
    throw Error("no catalog entry labelled '" + std::string(label) + "'");
}

std::vector<CatalogEntry> catalog_entries(int v, const SymmetryType& type)
{
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog())
        if (e.family.order() == v && e.family.tags == type.tags) out.push_back(e);
    return out;
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::not_applicable: return "x";
    }
    return "?";
}

const std::array<SymmetryType, 3>& table_types()
{
    static const std::array<SymmetryType, 3> types{SymmetryType::ksss(), SymmetryType::kkss(), SymmetryType::kkks()};
    return types;
}

const std::vector<Table1Row>& table1()
{
    static const std::vector<Table1Row> rows = parse_table();
    return rows;
}

} // namespace gsdf
