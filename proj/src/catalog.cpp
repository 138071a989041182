#include "slitplane/catalog.hpp"

#include "slitplane/errors.hpp"

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

// s^2 y as a series; the valuation-2 argument of the C and sqrt compositions.
Series s2y(int order)
{
    Series s = s_series(order);
    return (s * s).scaled(Laurent::monomial(1, 0, 1));
}

} // namespace

Series sqrt_one_minus_4t(int order)
{
    return sqrt(Series::poly(order, {{0, Laurent(1)}, {1, Laurent(-4)}}));
}

Series sqrt_one_plus_4t(int order)
{
    return sqrt(Series::poly(order, {{0, Laurent(1)}, {1, Laurent(4)}}));
}

Series catalan(int order)
{
    Series r = sqrt_one_minus_4t(order + 1);
    Series num = one(order + 1) - r; // 2t + 2t^2 + ...
    return shift_t(num, -1).scaled(rat(1, 2));
}

Series catalan_neg(int order)
{
    return compose_t(catalan(order), Series::monomial(order, -1, 0, 0, 1));
}

Series u_series(int order)
{
    Series via_catalan =
        shift_t(catalan(order) * catalan_neg(order), 1).truncated(order);

    Series r1 = sqrt_one_minus_4t(order);
    Series r2 = sqrt_one_plus_4t(order);
    Series via_radicals = (r2 - one(order)) * invert(r1 + one(order));

    if (!(via_catalan == via_radicals))
        throw SeriesError("u: defining expressions disagree");
    return via_catalan;
}

Series s_series(int order)
{
    Series arg = Series::poly(order, {{2, Laurent(4)}}); // 4 t^2
    Series c = compose_t(catalan(order), arg);
    return shift_t(c, 1).truncated(order);
}

Series slit_gf(int order)
{
    Series r1 = sqrt_one_minus_4t(order);
    Series r2 = sqrt_one_plus_4t(order);

    Laurent a1; // -2(1 + 1/x)
    a1.set(0, 0, -2);
    a1.set(-1, 0, -2);
    Series A = Series::poly(order, {{0, Laurent(1)}, {1, a1}}) + r1;

    Laurent b1; // +2(1 - 1/x)
    b1.set(0, 0, 2);
    b1.set(-1, 0, -2);
    Series B = Series::poly(order, {{0, Laurent(1)}, {1, b1}}) + r2;

    // Each factor has constant term 2; the product has constant term 4, so
    // the numerator is extracted as 2 sqrt(AB/4) and the 2 cancels against
    // the denominator's.
    Series numer = sqrt((A * B).scaled(rat(1, 4)));

    Laurent steps; // -(x + 1/x + y + 1/y)
    steps.set(1, 0, -1);
    steps.set(-1, 0, -1);
    steps.set(0, 1, -1);
    steps.set(0, -1, -1);
    Series kernel = Series::poly(order, {{0, Laurent(1)}, {1, steps}});

    return numer * invert(kernel);
}

namespace {

// sqrt(1 - 4 t^2 (1+y)^2 / y), with (1+y)^2/y stored as y + 2 + 1/y.
Series diag_radical(int order)
{
    Laurent q;
    q.set(0, 1, -4);
    q.set(0, 0, -8);
    q.set(0, -1, -4);
    return sqrt(Series::poly(order, {{0, Laurent(1)}, {2, q}}));
}

// t X = (1 - sqrt(1 - 4t^2(1+y)^2/y)) / (2(1+y)). The numerator vanishes at
// y = -1 coefficientwise, so the division is exact.
Series kernel_root_times_t(int order)
{
    Series num = one(order) - diag_radical(order);
    Laurent den;
    den.set(0, 0, 2);
    den.set(0, 1, 2);
    return div_exact(num, den);
}

} // namespace

Series kernel_root(int order)
{
    return shift_t(kernel_root_times_t(order + 1), -1);
}

Series diag_gf(int order)
{
    Series w = diag_radical(order);
    Series tx = kernel_root_times_t(order);
    Series r1 = sqrt_one_minus_4t(order);
    Series r2 = sqrt_one_plus_4t(order);
    Series t = t_term(order);

    Series bracket1 = (one(order) + r1).scaled(rat(1, 2)) - t - tx;
    Series bracket2 = (one(order) + r2).scaled(rat(1, 2)) + t - tx;
    return sqrt(bracket1) * sqrt(bracket2) * invert(w);
}

Series diag_gf_minus(int order)
{
    Series u = u_series(order);
    Series u2 = u * u;
    Series arg = s2y(order);
    Series c_arg = compose_t(catalan(order), arg);

    Series numer = (one(order) - u2) * arg * c_arg;
    Series denom = one(order) + u2 * c_arg * c_arg * arg;
    Series droot = sqrt(one(order) - arg.scaled(Rational(4)));
    return numer * invert(denom) * invert(droot);
}

Series diag_delta(int order)
{
    Series droot = sqrt(one(order) - s2y(order).scaled(Rational(4)));
    return (invert(droot) - one(order)).scaled(rat(1, 2));
}

Series diag_gf_plus(int order)
{
    return diag_gf_minus(order) + diag_delta(order);
}

Integer lower_diagonal_count(int i, long n)
{
    if (i < 1 || n < i)
        throw DomainError("lower_diagonal_count requires i >= 1 and n >= i");
    Rational v = rat(i, 2 * n);
    v *= Rational(binomial(2 * i, i));
    v *= Rational(binomial(n + i, 2 * i));
    v *= rat(binomial(4 * n, 2 * n), binomial(2 * n + 2 * i, 2 * i));
    if (!is_integer(v) || v < 0)
        throw SeriesError("lower_diagonal_count: closed form is not a nonnegative integer");
    return v.get_num();
}

Integer upper_diagonal_count(int i, long n)
{
    return upper_diagonal_count(i, n, diag_delta(static_cast<int>(2 * n)));
}

Integer upper_diagonal_count(int i, long n, const Series& delta)
{
    Rational d = delta_coefficient(delta, i, static_cast<int>(n));
    if (!is_integer(d) || d < 0)
        throw SeriesError("upper_diagonal_count: delta coefficient is not a nonnegative integer");
    return lower_diagonal_count(i, n) + d.get_num();
}

Integer quoted_upper_diag_term(int i, long n)
{
    if (i < 1 || n < i)
        throw DomainError("quoted_upper_diag_term requires i >= 1 and n >= i");
    Rational v = rat(i, n);
    v *= Rational(pow_int(4, static_cast<unsigned long>(n)));
    v *= Rational(binomial(2 * i, i));
    v *= Rational(binomial(2 * n, n - i));
    if (!is_integer(v))
        throw SeriesError("quoted_upper_diag_term: not an integer");
    return v.get_num();
}

Rational delta_coefficient(const Series& delta, int i, int n)
{
    return delta.coeff(2 * n).coeff(0, i);
}

Series lower_diag_slice_u_form(int i, int order)
{
    if (i < 1)
        throw DomainError("slice index must be positive");
    Series u = u_series(order);
    Series u2 = u * u;

    Series sum(order);
    Series upow = pow_series(u2, i);
    for (int k = i; k <= 2 * i - 1; ++k) {
        Rational c = Rational(binomial(2 * i - 1, k));
        if (k & 1)
            c = -c;
        sum += upow.scaled(c);
        upow = upow * u2;
    }
    if (i & 1)
        sum = -sum;
    return sum * invert(pow_series(one(order) - u2, 2 * i - 1));
}

NamedSeries named_series(const std::string& name, int order)
{
    if (name == "C")
        return {name, catalan(order), "Catalan generating function"};
    if (name == "C_neg")
        return {name, catalan_neg(order), "Catalan generating function at -t"};
    if (name == "u")
        return {name, u_series(order), "u = t C(t) C(-t)"};
    if (name == "s")
        return {name, s_series(order), "s = t C(4 t^2), walks ending at (0,1)"};
    if (name == "S")
        return {name, slit_gf(order), "complete slit-plane generating function"};
    if (name == "F")
        return {name, diag_gf(order), "diagonal generating function"};
    if (name == "F_plus")
        return {name, diag_gf_plus(order), "positive-diagonal part"};
    if (name == "F_minus")
        return {name, diag_gf_minus(order), "negative-diagonal part"};
    if (name == "X_kernel")
        return {name, kernel_root(order), "power-series root of the diagonal kernel"};
    if (name == "Delta")
        return {name, diag_delta(order), "diagonal difference series"};
    throw UnknownSeries("unknown series '" + name + "'");
}

std::vector<std::string> series_catalog()
{
    return {"C", "C_neg", "u", "s", "S", "F", "F_plus", "F_minus", "X_kernel", "Delta"};
}

} // namespace slitplane
