#include "gsdf/search.hpp"

#include "gsdf/verify.hpp"

#include <map>
#include <ostream>
#include <utility>

namespace gsdf {

bool SearchReport::found() const
{
    for (const auto& r : results)
        if (!r.families.empty()) return true;
    return false;
}

std::size_t SearchReport::class_count() const
{
    std::size_t n = 0;
    for (const auto& r : results) n += r.classes.size();
    return n;
}

std::size_t SearchReport::small_class_count() const
{
    std::size_t n = 0;
    for (const auto& r : results) n += r.small.size();
    return n;
}

ParamSearchResult search_param_set(const GsParamSet& p, const SymmetryType& type, const SearchOptions& options)
{
    if (!p.is_valid()) throw Error("not a GS parameter set: " + p.to_string());
    if (!type_fits(p, type)) throw Error("pattern " + type.to_string() + " does not fit " + p.to_string());

    ParamSearchResult result;
    result.params = p;
    result.type = type;

    // Blocks with the same kind and size share one row file.
    std::map<std::pair<int, int>, RowFile> files;
    FileSet set{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto kind = type.tags[i];
        const std::pair key{static_cast<int>(kind), p.k[i]};
        auto it = files.find(key);
        if (it == files.end())
            it = files.emplace(key, collect_rows(p.v, p.k[i], kind, CollectOptions{options.filter, options.jobs})).first;
        set[i] = &it->second;
        result.row_counts[i] = it->second.size();
    }

    const auto match = bins_match(set, p.lambda, MatchOptions{options.threshold, options.jobs});
    result.top_level_cases = match.top_level_cases;
    result.families.reserve(match.quadruples.size());
    for (const auto& q : match.quadruples) {
        auto f = TypedFamily::make(p, q);
        const auto df = is_difference_family(f);
        if (!df.ok() || *df.lambda != p.lambda || f.tags != type.tags || !check_gs_matrices(family_circulants(f)))
            result.verified = false;
        result.families.push_back(std::move(f));
    }
    result.classes = classify(result.families);
    result.small = small_classes(result.families);
    return result;
}

SearchReport search(int v, const SymmetryType& type, const SearchOptions& options)
{
    SearchReport report;
    report.v = v;
    report.type = type;
    for (const auto& p : param_sets_for_type(v, type)) report.results.push_back(search_param_set(p, type, options));
    return report;
}

Verdict recompute_verdict(const GsParamSet& p, const SymmetryType& type, const SearchOptions& options)
{
    if (!type_fits(p, type)) return Verdict::not_applicable;
    return search_param_set(p, type, options).families.empty() ? Verdict::no : Verdict::yes;
}

void write_report(std::ostream& out, const SearchReport& report)
{
    out << "# search v=" << report.v << " type=" << report.type.to_string() << '\n';
    if (report.results.empty()) out << "no parameter set fits this pattern\n";
    for (const auto& r : report.results) {
        out << r.params.to_string() << " rows=" << r.row_counts[0] << ',' << r.row_counts[1] << ',' << r.row_counts[2] << ','
            << r.row_counts[3] << " cases=" << r.top_level_cases << " families=" << r.families.size()
            << " classes=" << r.classes.size() << " small=" << r.small.size() << (r.verified ? "" : " VERIFY-FAILED") << '\n';
        for (const auto& c : r.classes) out << "  class " << c.key.to_string() << " members=" << c.members.size() << '\n';
    }
    out << "total classes=" << report.class_count() << " small=" << report.small_class_count() << '\n';
}

} // namespace gsdf
