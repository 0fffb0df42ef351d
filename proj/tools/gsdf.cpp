// gsdf: command-line driver for GS-difference family search and certification.
//
// Exit codes: 0 success, 1 exhaustive search found nothing,
// 2 bad input, 3 a certificate or table comparison failed.

#include "gsdf/catalog.hpp"
#include "gsdf/parallel.hpp"
#include "gsdf/search.hpp"
#include "gsdf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace gsdf;

constexpr int exit_ok = 0;
constexpr int exit_absent = 1;
constexpr int exit_input = 2;
constexpr int exit_failed = 3;

// "-" or empty means stdout.
template <class Fn>
void with_output(const std::string& path, Fn&& fn)
{
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    fn(out);
}

std::vector<TypedFamily> read_input(const std::string& path)
{
    if (path == "-") return read_families(std::cin, "<stdin>");
    return load_families(path);
}

std::string certificate_line(const Certificate& c)
{
    auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
    return std::string("df=") + flag(c.difference_family) + " gs=" + flag(c.gs_matrices) + " hadamard=" + flag(c.hadamard) +
           " skew=" + flag(c.skew_hadamard) + " typed=" + flag(c.typed_matrices);
}

void write_hadamard_file(const std::string& path, const TypedFamily& f)
{
    with_output(path, [&](std::ostream& out) { write_hadamard(out, build_gs_array(f)); });
}

int cmd_params(int v, const std::string& type_text, bool all)
{
    if (all) {
        for (const auto& p : enumerate_param_sets(v)) std::cout << p.to_string() << '\n';
        return exit_ok;
    }
    if (!type_text.empty()) {
        const auto type = SymmetryType::parse(type_text);
        const auto sets = param_sets_for_type(v, type);
        for (const auto& p : sets) std::cout << p.to_string() << '\n';
        return sets.empty() ? exit_absent : exit_ok;
    }
    const auto sets = skew_compatible_param_sets(v);
    for (const auto& p : sets) {
        std::cout << p.to_string();
        for (const auto& t : table_types()) std::cout << ' ' << t.to_string() << '=' << (type_fits(p, t) ? "fits" : "x");
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_generate(int v, int k, const std::string& kind, bool no_filter, int jobs, const std::string& out)
{
    const auto file = collect_rows(v, k, parse_kind(kind), CollectOptions{!no_filter, jobs});
    with_output(out, [&](std::ostream& os) { write_row_file(os, file); });
    std::cerr << file.size() << " rows\n";
    return exit_ok;
}

int cmd_match(const std::vector<std::string>& paths, int lambda, std::uint64_t threshold, int jobs, bool brute,
              const std::string& out)
{
    std::array<RowFile, 4> files;
    FileSet set{};
    GsParamSet p;
    p.lambda = lambda;
    for (std::size_t i = 0; i < 4; ++i) {
        files[i] = load_row_file(paths[i]);
        set[i] = &files[i];
        p.k[i] = files[i].k;
        if (files[i].v != files[0].v) throw Error("row files have different orders");
    }
    p.v = files[0].v;
    if (!p.is_valid()) throw Error("sizes and lambda do not form a GS parameter set: " + p.to_string());
    const auto result = brute ? brute_force_match(set, lambda) : bins_match(set, lambda, MatchOptions{threshold, jobs});
    std::vector<TypedFamily> families;
    for (const auto& q : result.quadruples) families.push_back(TypedFamily::make(p, q));
    with_output(out, [&](std::ostream& os) { write_families(os, families); });
    std::cerr << result.top_level_cases << " cases, " << families.size() << " families\n";
    return families.empty() ? exit_absent : exit_ok;
}

int cmd_classify(const std::string& in, bool small)
{
    const auto families = read_input(in);
    if (families.empty()) {
        std::cout << "0 classes\n";
        return exit_absent;
    }
    const auto classes = small ? small_classes(families) : classify(families);
    std::cout << classes.size() << (small ? " small classes\n" : " classes\n");
    for (const auto& c : classes) {
        std::cout << "# members=" << c.members.size() << " key=" << c.key.to_string() << '\n';
        write_family(std::cout, families[c.representative]);
    }
    return exit_ok;
}

int cmd_verify(const std::string& in, const std::string& hadamard_out)
{
    const auto families = read_input(in);
    if (families.empty()) throw Error("no families in " + in);
    int failures = 0;
    for (std::size_t i = 0; i < families.size(); ++i) {
        const auto c = certify(families[i]);
        std::cout << i + 1 << ' ' << families[i].params.to_string() << ' ' << families[i].type().to_string() << ' '
                  << certificate_line(c) << '\n';
        if (!c.ok()) ++failures;
    }
    if (!hadamard_out.empty()) write_hadamard_file(hadamard_out, families.front());
    std::cout << families.size() - static_cast<std::size_t>(failures) << " verified, " << failures << " failed\n";
    return failures ? exit_failed : exit_ok;
}

int cmd_search(int v, const std::string& type_text, const SearchOptions& options, const std::string& families_out,
               const std::string& hadamard_out)
{
    const auto type = SymmetryType::parse(type_text);
    const auto report = search(v, type, options);
    write_report(std::cout, report);
    std::vector<TypedFamily> reps;
    bool verified = true;
    for (const auto& r : report.results) {
        verified = verified && r.verified;
        for (const auto& c : r.classes) reps.push_back(r.families[c.representative]);
    }
    if (!families_out.empty()) save_families(families_out, reps);
    if (!hadamard_out.empty() && !reps.empty()) write_hadamard_file(hadamard_out, reps.front());
    if (!verified) return exit_failed;
    return report.found() ? exit_ok : exit_absent;
}

int cmd_catalog_list()
{
    for (const auto& e : catalog())
        std::cout << e.label << ' ' << e.family.params.to_string() << ' ' << e.family.type().to_string() << '\n';
    return exit_ok;
}

int cmd_catalog_verify_all()
{
    int failures = 0;
    for (const auto& e : catalog()) {
        const auto c = certify(e.family);
        std::cout << e.label << ' ' << (c.ok() ? "ok" : "FAIL") << ' ' << certificate_line(c) << '\n';
        if (!c.ok()) ++failures;
    }
    std::cout << catalog().size() - static_cast<std::size_t>(failures) << " verified, " << failures << " failures\n";
    return failures ? exit_failed : exit_ok;
}

int cmd_catalog_show(const std::string& label)
{
    const auto& e = catalog_entry(label);
    if (!e.note.empty()) std::cout << "# " << e.note << '\n';
    write_family(std::cout, e.family);
    return exit_ok;
}

int cmd_table1(int min_v, int max_v, const SearchOptions& options)
{
    int mismatches = 0;
    for (const auto& row : table1()) {
        if (row.params.v < min_v || row.params.v > max_v) continue;
        std::cout << row.params.to_string();
        for (std::size_t t = 0; t < 3; ++t) {
            const auto got = recompute_verdict(row.params, table_types()[t], options);
            const bool same = got == row.verdicts[t];
            if (!same) ++mismatches;
            std::cout << ' ' << table_types()[t].to_string() << '=' << verdict_name(got);
            if (!same) std::cout << "(expected " << verdict_name(row.verdicts[t]) << ')';
        }
        std::cout << '\n';
    }
    std::cout << (mismatches ? std::to_string(mismatches) + " mismatches\n" : std::string("all verdicts reproduced\n"));
    return mismatches ? exit_failed : exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Search and certify GS-difference families with symmetric and skew blocks"};
    app.require_subcommand(1);

    int v = 0;
    int jobs = gsdf::default_jobs();
    std::string type_text;
    std::string out;

    auto* params = app.add_subcommand("params", "List parameter sets of order v");
    bool all_sets = false;
    params->add_option("--v", v, "Order")->required()->check(CLI::Range(1, gsdf::max_order));
    params->add_option("--type", type_text, "Only sets fitting this pattern, e.g. kkss");
    params->add_flag("--all", all_sets, "Every normalized set, not only those with k1 = (v-1)/2");

    auto* generate = app.add_subcommand("generate", "Write the row file of all symmetric or skew blocks of one size");
    int k = 0;
    std::string kind;
    bool no_filter = false;
    generate->add_option("--v", v, "Order")->required()->check(CLI::Range(1, gsdf::max_order));
    generate->add_option("--k", k, "Block size")->required();
    generate->add_option("--kind", kind, "skew or symmetric")->required();
    generate->add_flag("--no-filter", no_filter, "Keep blocks that fail the spectral bound");
    generate->add_option("--jobs", jobs, "Worker threads (default $GSDF_JOBS or 1)");
    generate->add_option("--out", out, "Output file (default stdout)");

    auto* match = app.add_subcommand("match", "Match four row files");
    std::vector<std::string> row_paths;
    int lambda = 0;
    std::uint64_t threshold = 10'000'000;
    bool brute = false;
    match->add_option("files", row_paths, "Four row files")->required()->expected(4);
    match->add_option("--lambda", lambda, "Target lambda")->required();
    match->add_option("--threshold", threshold, "Bins guard threshold");
    match->add_option("--jobs", jobs, "Worker threads (default $GSDF_JOBS or 1)");
    match->add_flag("--brute-force", brute, "Use the exhaustive four-fold loop");
    match->add_option("--out", out, "Family file (default stdout)");

    auto* classify_cmd = app.add_subcommand("classify", "Partition a family file into equivalence classes");
    std::string in;
    bool small = false;
    classify_cmd->add_option("input", in, "Family file, or - for stdin")->required();
    classify_cmd->add_flag("--small", small, "Small classes: unit dilation only, blocks unordered");

    auto* verify_cmd = app.add_subcommand("verify", "Certify every family in a file");
    std::string hadamard_out;
    verify_cmd->add_option("input", in, "Family file, or - for stdin")->required();
    verify_cmd->add_option("--hadamard", hadamard_out, "Write the Hadamard matrix of the first family");

    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for one order and pattern");
    std::string families_out;
    search_cmd->add_option("--v", v, "Order")->required()->check(CLI::Range(1, gsdf::max_order));
    search_cmd->add_option("--type", type_text, "ksss, kkss or kkks")->required();
    search_cmd->add_option("--jobs", jobs, "Worker threads (default $GSDF_JOBS or 1)");
    search_cmd->add_option("--threshold", threshold, "Bins guard threshold");
    search_cmd->add_flag("--no-filter", no_filter, "Skip the spectral filter");
    search_cmd->add_option("--families", families_out, "Write one representative per class");
    search_cmd->add_option("--hadamard", hadamard_out, "Write the Hadamard matrix of the first representative");

    auto* catalog_cmd = app.add_subcommand("catalog", "Embedded published representatives");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "One line per entry");
    auto* catalog_verify = catalog_cmd->add_subcommand("verify-all", "Certify every entry");
    auto* catalog_show = catalog_cmd->add_subcommand("show", "Print one entry as a family file");
    std::string label;
    catalog_show->add_option("label", label, "e.g. 43-kkks-a")->required();

    auto* table_cmd = app.add_subcommand("table1", "Recompute the existence table by search");
    int min_v = 1;
    int max_v = 0;
    table_cmd->add_option("--max-v", max_v, "Largest order to recompute")->required();
    table_cmd->add_option("--min-v", min_v, "Smallest order to recompute");
    table_cmd->add_option("--jobs", jobs, "Worker threads (default $GSDF_JOBS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        const SearchOptions options{!no_filter, threshold, jobs};
        if (*params) return cmd_params(v, type_text, all_sets);
        if (*generate) return cmd_generate(v, k, kind, no_filter, jobs, out);
        if (*match) return cmd_match(row_paths, lambda, threshold, jobs, brute, out);
        if (*classify_cmd) return cmd_classify(in, small);
        if (*verify_cmd) return cmd_verify(in, hadamard_out);
        if (*search_cmd) return cmd_search(v, type_text, options, families_out, hadamard_out);
        if (*catalog_list) return cmd_catalog_list();
        if (*catalog_verify) return cmd_catalog_verify_all();
        if (*catalog_show) return cmd_catalog_show(label);
        if (*table_cmd) return cmd_table1(min_v, max_v, options);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
