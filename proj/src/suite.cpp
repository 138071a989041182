#include "slitplane/suite.hpp"

#include "slitplane/catalog.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <sstream>

namespace slitplane {

SuiteOptions uniform_suite_options(int order)
{
    SuiteOptions opts;
    opts.oracle_order = order;
    opts.identity_order = order;
    opts.cheap_order = order;
    opts.kernel_order = order;
    return opts;
}

namespace {

void add_entry(SuiteReport& out, const std::function<CheckReport()>& run,
               bool expected_discrepancy = false)
{
    const auto start = std::chrono::steady_clock::now();
    CheckReport report = run();
    const auto stop = std::chrono::steady_clock::now();

    SuiteEntry entry;
    entry.report = std::move(report);
    entry.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    if (entry.report.passed)
        entry.status = CheckStatus::Pass;
    else
        entry.status = expected_discrepancy ? CheckStatus::KnownDiscrepancy
                                            : CheckStatus::Fail;
    switch (entry.status) {
    case CheckStatus::Pass: ++out.passed; break;
    case CheckStatus::Fail: ++out.failed; break;
    case CheckStatus::KnownDiscrepancy: ++out.known; break;
    }
    out.entries.push_back(std::move(entry));
}

const char* status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::KnownDiscrepancy: return "known-discrepancy";
    }
    return "unknown";
}

} // namespace

SuiteReport run_suite(const SuiteOptions& opts)
{
    SuiteReport out;
    const int oracle = opts.oracle_order;
    const int ident = opts.identity_order;
    const int cheap = opts.cheap_order;
    const int derivation = std::min(ident, 16);
    const int cf_n_max = std::min(opts.closed_form_n_max, oracle / 2);
    const WalkTable table = enumerate(std::max(oracle, 2 * cf_n_max));

    add_entry(out, [&] { return check_full_gf_vs_enumeration(table); });
    add_entry(out, [&] { return check_diagonal_gf_vs_enumeration(table); });
    add_entry(out, [&] { return check_diagonal_ct_of_full_gf(oracle); });
    add_entry(out, [&] { return check_endpoint01_vs_s(table); });
    add_entry(out, [&] {
        return check_lower_diag_closed_form(table, opts.closed_form_i_max, cf_n_max);
    });
    add_entry(out, [&] {
        return check_upper_diag_closed_form(table, opts.closed_form_i_max, cf_n_max);
    });
    add_entry(out,
              [&] {
                  return check_quoted_upper_diag_form(table, opts.closed_form_i_max,
                                                      cf_n_max);
              },
              /*expected_discrepancy=*/true);
    add_entry(out, [&] { return check_coefficient_integrality(oracle, ident); });
    add_entry(out, [&] { return check_decomposition_support(ident); });
    add_entry(out, [&] { return check_lower_diag_vanishing(ident); });

    add_entry(out, [&] { return check_diag_decomposition(ident); });
    add_entry(out, [&] { return check_u_dual_definition(cheap); });
    add_entry(out, [&] { return check_catalan_u_form(cheap); });
    add_entry(out, [&] { return check_catalan_neg_u_form(cheap); });
    add_entry(out, [&] { return check_catalan_4t2_u_form(cheap); });
    add_entry(out, [&] { return check_sqrt_1m4t_u_form(cheap); });
    add_entry(out, [&] { return check_sqrt_1p4t_u_form(cheap); });
    add_entry(out, [&] { return check_t_from_s(cheap); });
    add_entry(out, [&] { return check_de_product(ident); });
    add_entry(out, [&] { return check_quoted_de_product(ident); },
              /*expected_discrepancy=*/true);
    for (int i = 1; i <= 4; ++i)
        add_entry(out, [&, i] { return check_lower_diag_sum_s_form(i, ident); });
    add_entry(out, [&] { return check_half_integer_binomial(opts.half_integer_n_max); });
    for (int i = 1; i <= 5; ++i)
        add_entry(out, [&, i] { return check_lower_diag_slice_u_form(i, ident); });
    add_entry(out, [&] { return check_diag_minus_t_derivative(ident); });
    add_entry(out, [&] { return check_diag_minus_t_integrate(ident); });
    add_entry(out, [&] { return check_diag_minus_antiderivative_form(ident); });
    add_entry(out, [&] { return check_diag_minus_u_quotient_form(ident); });
    add_entry(out, [&] { return check_diag_delta_s_power_form(6, ident); });
    add_entry(out, [&] { return check_diag_gf_via_kernel(derivation); });
    add_entry(out, [&] { return check_kernel_root_quadratic_formula(derivation); });

    add_entry(out, [&] {
        return check_kernel_ct_vs_direct_random(opts.kernel_instances,
                                                opts.kernel_order, opts.seed);
    });
    add_entry(out, [&] { return check_classical_lagrange(12, opts.seed); });
    add_entry(out, [&] { return check_fixed_point_uniqueness(ident); });

    return out;
}

std::string suite_to_json(const SuiteReport& report)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SuiteEntry& e : report.entries) {
        nlohmann::ordered_json item;
        item["name"] = e.report.name;
        item["order"] = e.report.order;
        item["status"] = status_name(e.status);
        if (e.report.first_mismatch) {
            const Mismatch& m = *e.report.first_mismatch;
            item["first_mismatch"] = {{"n", m.n},
                                      {"ex", m.mono.ex},
                                      {"ey", m.mono.ey},
                                      {"lhs", to_string(m.lhs)},
                                      {"rhs", to_string(m.rhs)}};
        } else {
            item["first_mismatch"] = nullptr;
        }
        item["millis"] = e.millis;
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

std::string suite_to_plain(const SuiteReport& report)
{
    std::ostringstream os;
    for (const SuiteEntry& e : report.entries) {
        switch (e.status) {
        case CheckStatus::Pass: os << "PASS  "; break;
        case CheckStatus::Fail: os << "FAIL  "; break;
        case CheckStatus::KnownDiscrepancy: os << "KNOWN-DISCREPANCY  "; break;
        }
        os << e.report.name << " (order " << e.report.order << ")";
        if (e.report.first_mismatch) {
            const Mismatch& m = *e.report.first_mismatch;
            os << ": first mismatch at t^" << m.n << " x^" << m.mono.ex << " y^"
               << m.mono.ey << ": lhs=" << to_string(m.lhs)
               << " rhs=" << to_string(m.rhs);
        }
        os << "\n";
    }
    os << "passed " << report.passed << ", failed " << report.failed
       << ", known discrepancies " << report.known << "\n";
    return os.str();
}

} // namespace slitplane
