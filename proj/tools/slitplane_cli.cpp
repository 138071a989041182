// Command-line front end: walk tables, named series, closed-form diagonal
// counts, and the full identity-check suite.

#include "slitplane/catalog.hpp"
#include "slitplane/errors.hpp"
#include "slitplane/format.hpp"
#include "slitplane/suite.hpp"
#include "slitplane/walks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace slitplane;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text)
{
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, pos));
        const int hi = std::stoi(text.substr(pos + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw DomainError("malformed range '" + text + "' (expected a..b)");
    }
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot open output file '" + path + "'");
    out << content;
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact generating-function toolkit for walks on the slit plane"};
    app.require_subcommand(1);

    std::string format;
    std::string out_path;
    auto add_io_options = [&](CLI::App* cmd, const char* default_format) {
        cmd->add_option("--format", format,
                        std::string("output format: csv, json or plain (default ") +
                            default_format + ")")
            ->check(CLI::IsMember({"csv", "json", "plain"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* table_cmd =
        app.add_subcommand("table", "nonzero walk counts a_{i,j}(n), n >= 1");
    int table_order = 14;
    table_cmd->add_option("--order", table_order, "maximum step count")
        ->check(CLI::PositiveNumber);
    add_io_options(table_cmd, "csv");

    auto* series_cmd = app.add_subcommand("series", "print a named series");
    std::string series_name;
    int series_order = 14;
    series_cmd
        ->add_option("name", series_name,
                     "one of: C, C_neg, u, s, S, F, F_plus, F_minus, X_kernel, Delta")
        ->required();
    series_cmd->add_option("--order", series_order, "truncation order")
        ->check(CLI::PositiveNumber);
    add_io_options(series_cmd, "plain");

    auto* cf_cmd =
        app.add_subcommand("closed-form", "diagonal counts from the closed forms");
    std::string i_range_text = "1..4";
    std::string n_range_text = "1..7";
    bool check_dp = false;
    cf_cmd->add_option("--i-range", i_range_text, "i range a..b (i >= 1)");
    cf_cmd->add_option("--n-range", n_range_text, "n range a..b (rows require n >= i)");
    cf_cmd->add_flag("--check-dp", check_dp,
                     "cross-check every row against the enumerator");
    add_io_options(cf_cmd, "csv");

    auto* check_cmd = app.add_subcommand("check", "run the identity-verification suite");
    int check_order = 0;
    std::uint64_t seed = 1;
    check_cmd
        ->add_option("--order", check_order,
                     "run every check at this order (default: 14 for "
                     "enumeration checks, 24 for identities)")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", seed, "seed for the randomized kernel instances");
    add_io_options(check_cmd, "json");

    CLI11_PARSE(app, argc, argv);

    if (table_cmd->parsed()) {
        const WalkTable table = enumerate(table_order);
        const std::string fmt = format.empty() ? "csv" : format;
        if (fmt == "csv")
            write_output(out_path, table_to_csv(table));
        else if (fmt == "json")
            write_output(out_path, table_to_json(table));
        else
            write_output(out_path, table_to_plain(table));
        return 0;
    }

    if (series_cmd->parsed()) {
        const NamedSeries named = named_series(series_name, series_order);
        const std::string fmt = format.empty() ? "plain" : format;
        if (fmt == "csv")
            write_output(out_path, series_to_csv(named.series));
        else if (fmt == "json")
            write_output(out_path, series_to_json(named));
        else
            write_output(out_path, series_to_plain(named.series) + "\n");
        return 0;
    }

    if (cf_cmd->parsed()) {
        const Range ir = parse_range(i_range_text);
        const Range nr = parse_range(n_range_text);
        if (ir.lo < 1 || nr.lo < 1 || ir.hi < ir.lo || nr.hi < nr.lo)
            throw DomainError("ranges must satisfy 1 <= a <= b");
        if (ir.lo > nr.hi)
            throw DomainError("ranges produce no valid (i, n) pair with n >= i");

        const Series delta = diag_delta(2 * nr.hi);
        std::vector<ClosedFormRow> rows;
        WalkTable table(0);
        if (check_dp)
            table = enumerate(2 * nr.hi);
        for (int i = ir.lo; i <= ir.hi; ++i) {
            for (int n = std::max(i, nr.lo); n <= nr.hi; ++n) {
                ClosedFormRow row;
                row.i = i;
                row.n = n;
                row.lower = lower_diagonal_count(i, n);
                row.upper = upper_diagonal_count(i, n, delta);
                row.dp_checked = check_dp;
                if (check_dp &&
                    (row.lower != table.count(2 * n, -i, -i) ||
                     row.upper != table.count(2 * n, i, i)))
                    throw SeriesError("closed form disagrees with enumeration at i=" +
                                      std::to_string(i) + ", n=" + std::to_string(n));
                rows.push_back(std::move(row));
            }
        }
        if (rows.empty())
            throw DomainError("ranges produce no valid (i, n) pair with n >= i");

        const std::string fmt = format.empty() ? "csv" : format;
        if (fmt == "csv")
            write_output(out_path, closed_form_to_csv(rows));
        else if (fmt == "json")
            write_output(out_path, closed_form_to_json(rows));
        else
            write_output(out_path, closed_form_to_plain(rows));
        return 0;
    }

    // check
    SuiteOptions opts;
    if (check_order > 0)
        opts = uniform_suite_options(check_order);
    opts.seed = seed;
    const SuiteReport report = run_suite(opts);
    const std::string fmt = format.empty() ? "json" : format;
    if (fmt == "plain")
        write_output(out_path, suite_to_plain(report));
    else
        write_output(out_path, suite_to_json(report));
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const slitplane::UnknownSeries& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const slitplane::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
