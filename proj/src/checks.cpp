#include "slitplane/checks.hpp"

#include "slitplane/catalog.hpp"
#include "slitplane/errors.hpp"
#include "slitplane/kernel.hpp"

#include <random>
#include <utility>

namespace slitplane {

namespace {

Series one(int order)
{
    return Series(order, Laurent(1));
}

Series t_term(int order)
{
    return Series::poly(order, {{1, Laurent(1)}});
}

Series s2y_series(int order)
{
    Series s = s_series(order);
    return (s * s).scaled(Laurent::monomial(1, 0, 1));
}

// The diagonal kernel G = x^2(1+y) + 1 + 1/y as a t-constant series.
Series diag_kernel_g(int order)
{
    Laurent g;
    g.set(2, 0, 1);
    g.set(2, 1, 1);
    g.set(0, 0, 1);
    g.set(0, -1, 1);
    return Series(order, g);
}

// Numerator of the substituted complete GF, halved: sqrt(AB/4) with
// A = 1 - 2t(1+x) + sqrt(1-4t) and B = 1 + 2t(1-x) + sqrt(1+4t).
Series diag_kernel_f(int order)
{
    Laurent a1;
    a1.set(0, 0, -2);
    a1.set(1, 0, -2);
    Series A = Series::poly(order, {{0, Laurent(1)}, {1, a1}}) + sqrt_one_minus_4t(order);

    Laurent b1;
    b1.set(0, 0, 2);
    b1.set(1, 0, -2);
    Series B = Series::poly(order, {{0, Laurent(1)}, {1, b1}}) + sqrt_one_plus_4t(order);

    return sqrt((A * B).scaled(rat(1, 4)));
}

CheckReport pass_report(std::string name, int order)
{
    return CheckReport{std::move(name), order, true, std::nullopt};
}

CheckReport fail_report(std::string name, int order, Mismatch m)
{
    return CheckReport{std::move(name), order, false, std::move(m)};
}

// Deterministic across standard-library implementations: raw engine output
// reduced by modulo, no std distributions.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long pick(long lo, long hi)
    {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Random element of Z[x][t] with x-degree <= 4 and t-degree <= 3,
// coefficients in [-3, 3]; never identically zero.
Series random_xt_poly(Rng& rng, int order)
{
    Series f(order);
    bool nonzero = false;
    for (int td = 0; td <= std::min(3, order); ++td) {
        Laurent c;
        for (int xd = 0; xd <= 4; ++xd) {
            long v = rng.pick(-3, 3);
            if (v != 0) {
                c.set(xd, 0, Rational(v));
                nonzero = true;
            }
        }
        f.set_coeff(td, std::move(c));
    }
    if (!nonzero)
        f.set_coeff(0, Laurent(1));
    return f;
}

} // namespace

CheckReport compare_series(std::string name, const Series& lhs, const Series& rhs)
{
    const int order = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= order; ++n) {
        Laurent diff = lhs.coeff(n) - rhs.coeff(n);
        if (!diff.is_zero()) {
            const Monomial m = diff.terms().begin()->first;
            return fail_report(std::move(name), order,
                               Mismatch{n, m, lhs.coeff(n).coeff(m.ex, m.ey),
                                        rhs.coeff(n).coeff(m.ex, m.ey)});
        }
    }
    return pass_report(std::move(name), order);
}

// --- enumeration-facing checks ------------------------------------------

CheckReport check_full_gf_vs_enumeration(const WalkTable& table)
{
    const int order = table.max_steps();
    return compare_series("full-gf-vs-enumeration", slit_gf(order), full_series(table));
}

CheckReport check_diagonal_gf_vs_enumeration(const WalkTable& table)
{
    const int order = table.max_steps();
    return compare_series("diagonal-gf-vs-enumeration", diag_gf(order),
                          diagonal_series(table));
}

CheckReport check_diagonal_ct_of_full_gf(int order)
{
    const Series full = slit_gf(order);
    const Series sub = subst_monomial(full, SignedMonomial{1, -1, 0},
                                      SignedMonomial{1, 1, 1});
    return compare_series("diagonal-ct-of-full-gf", ct(sub, 'x'), diag_gf(order));
}

CheckReport check_endpoint01_vs_s(const WalkTable& table)
{
    const int order = table.max_steps();
    return compare_series("endpoint-01-vs-s", s_series(order),
                          endpoint_series(table, 0, 1));
}

CheckReport check_lower_diag_closed_form(const WalkTable& table, int i_max, int n_max)
{
    const std::string name = "lower-diag-closed-form";
    for (int i = 1; i <= i_max; ++i) {
        for (int n = i; n <= n_max; ++n) {
            const Rational lhs(lower_diagonal_count(i, n));
            const Rational rhs(table.count(2 * n, -i, -i));
            if (lhs != rhs)
                return fail_report(name, 2 * n_max,
                                   Mismatch{2 * n, Monomial{0, -i}, lhs, rhs});
        }
    }
    return pass_report(name, 2 * n_max);
}

CheckReport check_upper_diag_closed_form(const WalkTable& table, int i_max, int n_max)
{
    const std::string name = "upper-diag-closed-form";
    const Series delta = diag_delta(2 * n_max);
    for (int i = 1; i <= i_max; ++i) {
        for (int n = i; n <= n_max; ++n) {
            const Rational lhs(upper_diagonal_count(i, n, delta));
            const Rational rhs(table.count(2 * n, i, i));
            if (lhs != rhs)
                return fail_report(name, 2 * n_max,
                                   Mismatch{2 * n, Monomial{0, i}, lhs, rhs});
        }
    }
    return pass_report(name, 2 * n_max);
}

CheckReport check_quoted_upper_diag_form(const WalkTable& table, int i_max, int n_max)
{
    const std::string name = "quoted-upper-diag-closed-form";
    for (int i = 1; i <= i_max; ++i) {
        for (int n = i; n <= n_max; ++n) {
            const Rational lhs(lower_diagonal_count(i, n) + quoted_upper_diag_term(i, n));
            const Rational rhs(table.count(2 * n, i, i));
            if (lhs != rhs)
                return fail_report(name, 2 * n_max,
                                   Mismatch{2 * n, Monomial{0, i}, lhs, rhs});
        }
    }
    return pass_report(name, 2 * n_max);
}

namespace {

bool scan_nonneg_integral(const Series& f, int order, Mismatch& out)
{
    for (int n = 0; n <= order; ++n) {
        for (const auto& [m, c] : f.coeff(n).terms()) {
            if (!is_integer(c) || c < 0) {
                out = Mismatch{n, m, c, Rational(0)};
                return false;
            }
        }
    }
    return true;
}

} // namespace

CheckReport check_coefficient_integrality(int oracle_order, int identity_order)
{
    const std::string name = "coefficient-integrality";
    Mismatch m;
    if (!scan_nonneg_integral(slit_gf(oracle_order), oracle_order, m))
        return fail_report(name, oracle_order, m);
    if (!scan_nonneg_integral(diag_gf(identity_order), identity_order, m))
        return fail_report(name, identity_order, m);
    if (!scan_nonneg_integral(diag_gf_plus(identity_order), identity_order, m))
        return fail_report(name, identity_order, m);
    if (!scan_nonneg_integral(diag_gf_minus(identity_order), identity_order, m))
        return fail_report(name, identity_order, m);
    return pass_report(name, identity_order);
}

CheckReport check_decomposition_support(int order)
{
    const std::string name = "decomposition-support";
    const Series fp = diag_gf_plus(order);
    for (int n = 0; n <= order; ++n)
        for (const auto& [m, c] : fp.coeff(n).terms())
            if (m.ey < 1)
                return fail_report(name, order, Mismatch{n, m, c, Rational(0)});

    const Series fm_bar = subst_monomial(diag_gf_minus(order), SignedMonomial{1, 1, 0},
                                         SignedMonomial{1, 0, -1});
    for (int n = 0; n <= order; ++n)
        for (const auto& [m, c] : fm_bar.coeff(n).terms())
            if (m.ey > -1)
                return fail_report(name, order, Mismatch{n, m, c, Rational(0)});
    return pass_report(name, order);
}

CheckReport check_lower_diag_vanishing(int order)
{
    const std::string name = "lower-diag-vanishing-below-i";
    const Series fm = diag_gf_minus(order);
    for (int n = 0; n <= order; ++n)
        for (const auto& [m, c] : fm.coeff(n).terms())
            if (2 * m.ey > n)
                return fail_report(name, order, Mismatch{n, m, c, Rational(0)});
    return pass_report(name, order);
}

// --- series identity battery --------------------------------------------

CheckReport check_diag_decomposition(int order)
{
    const Series lhs = diag_gf(order);
    const Series fm_bar = subst_monomial(diag_gf_minus(order), SignedMonomial{1, 1, 0},
                                         SignedMonomial{1, 0, -1});
    const Series rhs = diag_gf_plus(order) + one(order) + fm_bar;
    return compare_series("diagonal-gf-decomposition", lhs, rhs);
}

CheckReport check_u_dual_definition(int order)
{
    const Series via_catalan =
        shift_t(catalan(order) * catalan_neg(order), 1).truncated(order);
    const Series via_radicals = (sqrt_one_plus_4t(order) - one(order)) *
                                invert(sqrt_one_minus_4t(order) + one(order));
    return compare_series("u-dual-definition", via_catalan, via_radicals);
}

CheckReport check_catalan_u_form(int order)
{
    const Series u = u_series(order);
    const Series u2 = u * u;
    const Series rhs = (one(order) + u2) * invert(one(order) - u);
    return compare_series("catalan-u-form", catalan(order), rhs);
}

CheckReport check_catalan_neg_u_form(int order)
{
    const Series u = u_series(order);
    const Series u2 = u * u;
    const Series rhs = (one(order) + u2) * invert(one(order) + u);
    return compare_series("catalan-neg-u-form", catalan_neg(order), rhs);
}

CheckReport check_catalan_4t2_u_form(int order)
{
    const Series u = u_series(order);
    const Series u2 = u * u;
    const Series lhs = compose_t(catalan(order), Series::poly(order, {{2, Laurent(4)}}));
    const Series rhs = pow_series(one(order) + u2, 2) *
                       invert(pow_series(one(order) - u2, 2));
    return compare_series("catalan-4t2-u-form", lhs, rhs);
}

CheckReport check_sqrt_1m4t_u_form(int order)
{
    const Series u = u_series(order);
    const Series u2 = u * u;
    const Series rhs = (one(order) - u.scaled(Rational(2)) - u2) * invert(one(order) + u2);
    return compare_series("sqrt-1m4t-u-form", sqrt_one_minus_4t(order), rhs);
}

CheckReport check_sqrt_1p4t_u_form(int order)
{
    const Series u = u_series(order);
    const Series u2 = u * u;
    const Series rhs = (one(order) + u.scaled(Rational(2)) - u2) * invert(one(order) + u2);
    return compare_series("sqrt-1p4t-u-form", sqrt_one_plus_4t(order), rhs);
}

CheckReport check_t_from_s(int order)
{
    const Series s = s_series(order);
    const Series s2 = s * s;
    const Series lhs = s * invert(one(order) + s2.scaled(Rational(4)));
    return compare_series("t-from-s", lhs, t_term(order));
}

namespace {

Series de_product_lhs(int order)
{
    const Series s = s_series(order);
    const Series s2 = s * s;
    const Series d = sqrt(one(order) - s2.scaled(Laurent::monomial(4, 0, 1)));
    const Series e = sqrt(one(order) - s2.scaled(Laurent::monomial(4, 0, -1)));
    return d * e;
}

Series diag_radical_direct(int order)
{
    Laurent q;
    q.set(0, 1, -4);
    q.set(0, 0, -8);
    q.set(0, -1, -4);
    return sqrt(Series::poly(order, {{0, Laurent(1)}, {2, q}}));
}

} // namespace

CheckReport check_de_product(int order)
{
    const Series s = s_series(order);
    const Series factor = one(order) + (s * s).scaled(Rational(4));
    return compare_series("de-product-radical", de_product_lhs(order),
                          factor * diag_radical_direct(order));
}

CheckReport check_quoted_de_product(int order)
{
    return compare_series("quoted-de-product-form", de_product_lhs(order),
                          diag_radical_direct(order));
}

CheckReport check_u_radical_facts(int order)
{
    const CheckReport parts[] = {
        check_catalan_u_form(order),      check_catalan_neg_u_form(order),
        check_catalan_4t2_u_form(order),  check_sqrt_1m4t_u_form(order),
        check_sqrt_1p4t_u_form(order),    check_t_from_s(order),
        check_de_product(order),
    };
    for (const CheckReport& r : parts)
        if (!r.passed)
            return fail_report("u-radical-facts", order, *r.first_mismatch);
    return pass_report("u-radical-facts", order);
}

CheckReport check_lower_diag_sum_s_form(int i, int order)
{
    const std::string name = "lower-diag-sum-s-form-i" + std::to_string(i);
    Series lhs(order);
    for (int n = 0; 2 * n <= order; ++n) {
        Rational c = Rational(binomial(n + i, 2 * i)) *
                     rat(binomial(4 * n, 2 * n), binomial(2 * n + 2 * i, 2 * i));
        if (c != 0)
            lhs.set_coeff(2 * n, Laurent(c));
    }

    const Series s = s_series(order);
    const Series s2 = s * s;
    const Series rhs = sqrt(one(order) + s2.scaled(Rational(4))) * pow_series(s2, i) *
                       invert(one(order) - s2.scaled(Rational(4)));
    CheckReport r = compare_series(name, lhs, rhs);
    return r;
}

CheckReport check_half_integer_binomial(int n_max)
{
    const std::string name = "half-integer-binomial-identity";
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 1; i <= n; ++i) {
            const Rational lhs = Rational(binomial(n + i, 2 * i)) *
                                 rat(binomial(4 * n, 2 * n), binomial(2 * n + 2 * i, 2 * i));
            const Rational rhs = binomial_rat(rat(4 * n - 1, 2), n - i) *
                                 Rational(pow_int(4, static_cast<unsigned long>(n - i)));
            if (lhs != rhs)
                return fail_report(name, n_max, Mismatch{n, Monomial{i, 0}, lhs, rhs});
        }
    }
    return pass_report(name, n_max);
}

CheckReport check_lower_diag_slice_u_form(int i, int order)
{
    const std::string name = "lower-diag-slice-u-form-i" + std::to_string(i);
    const Series lhs = lower_diag_slice_u_form(i, order);
    const Series rhs = slice_y(diag_gf_minus(order), i);
    CheckReport r = compare_series(name, lhs, rhs);
    if (r.first_mismatch)
        r.first_mismatch->mono.ey = i;
    return r;
}

namespace {

// t d/dt of the negative-diagonal part in closed form:
// 2 s^2 y (1-4s^2y)^(-3/2) sqrt(1+4s^2) / (1-4s^2).
Series diag_minus_derivative_rhs(int order)
{
    const Series s = s_series(order);
    const Series s2 = s * s;
    const Series arg = s2.scaled(Laurent::monomial(1, 0, 1));
    const Series base = one(order) - arg.scaled(Rational(4));
    const Series droot = sqrt(base);
    return arg.scaled(Rational(2)) * invert(base * droot) *
           sqrt(one(order) + s2.scaled(Rational(4))) *
           invert(one(order) - s2.scaled(Rational(4)));
}

// y*geo(1+y)/2 * (factor - 1), where geo is the geometric expansion of
// 1/(1+y) through y^cap. Exact for y-exponents <= cap+1.
Series antiderivative_expr(const Series& factor, int order, int cap)
{
    Laurent geo;
    for (int k = 0; k <= cap; ++k)
        geo.set(0, k, (k & 1) ? -1 : 1);
    const Series half_y_over_1py =
        Series(order, geo * Laurent::monomial(rat(1, 2), 0, 1));
    return half_y_over_1py * (factor - one(order));
}

} // namespace

CheckReport check_diag_minus_t_derivative(int order)
{
    return compare_series("diag-minus-t-derivative",
                          t_log_derivative(diag_gf_minus(order)),
                          diag_minus_derivative_rhs(order));
}

CheckReport check_diag_minus_t_integrate(int order)
{
    return compare_series("diag-minus-t-integrate",
                          t_log_integrate(diag_minus_derivative_rhs(order)),
                          diag_gf_minus(order));
}

CheckReport check_diag_minus_antiderivative_form(int order)
{
    const int cap = order / 2;
    const Series s = s_series(order);
    const Series s2 = s * s;
    const Series arg = s2.scaled(Laurent::monomial(1, 0, 1));
    const Series factor = sqrt(one(order) + s2.scaled(Rational(4))) *
                          invert(sqrt(one(order) - arg.scaled(Rational(4))));
    const Series expr = antiderivative_expr(factor, order, cap);
    return compare_series("diag-minus-antiderivative-form",
                          truncate_y(expr, 1, cap),
                          truncate_y(diag_gf_minus(order), 1, cap));
}

CheckReport check_diag_minus_u_quotient_form(int order)
{
    const int cap = order / 2;
    const Series u = u_series(order);
    const Series u2 = u * u;
    const Series s = s_series(order);
    const Series arg = (s * s).scaled(Laurent::monomial(1, 0, 1));
    const Series factor = (one(order) + u2) * invert(one(order) - u2) *
                          invert(sqrt(one(order) - arg.scaled(Rational(4))));
    const Series expr = antiderivative_expr(factor, order, cap);
    return compare_series("diag-minus-u-quotient-form",
                          truncate_y(expr, 1, cap),
                          truncate_y(diag_gf_minus(order), 1, cap));
}

CheckReport check_diag_delta_s_power_form(int i_max, int order)
{
    const std::string name = "diag-delta-s-power-form";
    const Series delta = diag_delta(order);
    const Series s = s_series(order);
    const Series s2 = s * s;
    Series spow = s2;
    for (int i = 1; i <= i_max; ++i) {
        const Series lhs = slice_y(delta, i);
        const Series rhs = spow.scaled(rat(binomial(2 * i, i), Integer(2)));
        CheckReport r = compare_series(name, lhs, rhs);
        if (!r.passed) {
            r.first_mismatch->mono.ey = i;
            return r;
        }
        spow = spow * s2;
    }
    return pass_report(name, order);
}

CheckReport check_diag_gf_via_kernel(int order)
{
    KernelProblem p{diag_kernel_g(order), diag_kernel_f(order), order};
    return compare_series("diagonal-gf-via-kernel-ct", kernel_ct(p), diag_gf(order));
}

CheckReport check_kernel_root_quadratic_formula(int order)
{
    const Series solved = solve_fixed_point(diag_kernel_g(order), order);
    return compare_series("kernel-root-quadratic-formula", solved, kernel_root(order));
}

// --- kernel-operator property checks -------------------------------------

CheckReport check_kernel_ct_vs_direct_random(int instances, int order, std::uint64_t seed)
{
    const std::string name = "kernel-ct-vs-direct-random";
    Rng rng(seed);
    for (int k = 0; k < instances; ++k) {
        KernelProblem p{random_xt_poly(rng, order), random_xt_poly(rng, order), order};
        CheckReport r = compare_series(name, kernel_ct(p), kernel_ct_direct(p));
        if (!r.passed)
            return r;
    }
    return pass_report(name, order);
}

CheckReport check_classical_lagrange(int n_max, std::uint64_t seed)
{
    const std::string name = "classical-lagrange-inversion";
    Rng rng(seed);
    for (int inst = 0; inst < 8; ++inst) {
        Laurent g0;
        if (inst == 0) { // (1+x)^2, the shifted-Catalan case
            g0.set(0, 0, 1);
            g0.set(1, 0, 2);
            g0.set(2, 0, 1);
        } else {
            for (int xd = 0; xd <= 4; ++xd) {
                long v = rng.pick(-3, 3);
                if (v != 0)
                    g0.set(xd, 0, Rational(v));
            }
            if (g0.is_zero())
                g0.set(0, 0, 1);
        }
        const Series X = solve_fixed_point(Series(n_max, g0), n_max);
        Laurent gpow = g0;
        for (int n = 1; n <= n_max; ++n) {
            const Rational lhs = Rational(n) * X.coeff(n).scalar_part();
            const Rational rhs = gpow.coeff(n - 1, 0);
            if (lhs != rhs)
                return fail_report(name, n_max,
                                   Mismatch{n, Monomial{n - 1, 0}, lhs, rhs});
            gpow = gpow * g0;
        }
    }
    return pass_report(name, n_max);
}

CheckReport check_fixed_point_uniqueness(int order)
{
    const std::string name = "fixed-point-uniqueness";

    const Series g1 = diag_kernel_g(order);
    const Series seed1 = shift_t(subst_x(g1, Series(order)), 1).truncated(order);
    CheckReport r = compare_series(name, solve_fixed_point(g1, order),
                                   solve_fixed_point(g1, order, seed1));
    if (!r.passed)
        return r;

    Rng rng(7);
    const Series g2 = random_xt_poly(rng, order);
    const Series seed2 = shift_t(subst_x(g2, Series(order)), 1).truncated(order);
    return compare_series(name, solve_fixed_point(g2, order),
                          solve_fixed_point(g2, order, seed2));
}

} // namespace slitplane
