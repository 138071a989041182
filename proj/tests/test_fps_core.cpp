#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slitplane/catalog.hpp"
#include "slitplane/errors.hpp"
#include "slitplane/series.hpp"
#include "slitplane/walks.hpp"

#include <random>

using namespace slitplane;

namespace {

Series one(int order)
{
    return Series(order, Laurent(1));
}

// Scalar series from the leading coefficients.
Series scal(int order, std::initializer_list<long> cs)
{
    Series f(order);
    int n = 0;
    for (long c : cs) {
        if (n > order)
            break;
        f.set_coeff(n++, Laurent(Rational(c)));
    }
    return f;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long pick(long lo, long hi)
    {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Laurent random_laurent(Rng& rng, int max_terms, int max_exp)
{
    Laurent c;
    const long terms = rng.pick(0, max_terms);
    for (long k = 0; k < terms; ++k) {
        const int ex = static_cast<int>(rng.pick(-max_exp, max_exp));
        const int ey = static_cast<int>(rng.pick(-max_exp, max_exp));
        const long num = rng.pick(-9, 9);
        const long den = rng.pick(1, 4);
        if (num != 0)
            c.set(ex, ey, rat(num, den));
    }
    return c;
}

Series random_series(Rng& rng, int order, int max_terms = 2, int max_exp = 2)
{
    Series f(order);
    for (int n = 0; n <= order; ++n)
        f.set_coeff(n, random_laurent(rng, max_terms, max_exp));
    return f;
}

Series random_scalar_series(Rng& rng, int order)
{
    Series f(order);
    for (int n = 0; n <= order; ++n) {
        const long num = rng.pick(-9, 9);
        const long den = rng.pick(1, 9);
        f.set_coeff(n, Laurent(rat(num, den)));
    }
    return f;
}

} // namespace

TEST_CASE("addition")
{
    const Series a = scal(3, {1, 1});  // 1 + t
    const Series b = scal(3, {1, -1}); // 1 - t
    CHECK(a + b == scal(3, {2}));

    Rng rng(11);
    const Series f = random_series(rng, 6);
    CHECK(f + Series(6) == f);

    const Series xt = Series::monomial(2, 1, 1, 0, 1);
    const Series xbart = Series::monomial(2, 1, -1, 0, 1);
    Laurent merged;
    merged.set(1, 0, 1);
    merged.set(-1, 0, 1);
    CHECK(xt + xbart == Series::poly(2, {{1, merged}}));
}

TEST_CASE("addition truncates to the smaller order")
{
    const Series a = scal(5, {1, 2, 3, 4, 5, 6});
    const Series b = scal(3, {1});
    const Series sum = a + b;
    CHECK(sum.order() == 3);
    CHECK(sum == scal(3, {2, 2, 3, 4}));
}

TEST_CASE("multiplication")
{
    const Series a = scal(4, {1, 1});
    const Series b = scal(4, {1, -1});
    CHECK(a * b == scal(4, {1, 0, -1}));

    // t C(t) C(-t): the first coefficients multiplied out by hand from the
    // Catalan numbers 1, 1, 2, 5, 14, 42.
    const Series u = shift_t(catalan(6) * catalan_neg(6), 1).truncated(6);
    CHECK(u == scal(6, {0, 1, 0, 3, 0, 22, 0}));

    Rng rng(12);
    const Series f = random_series(rng, 6);
    CHECK(f * one(6) == f);
}

TEST_CASE("invert")
{
    const Series geo = invert(scal(5, {1, -1}));
    CHECK(geo == scal(5, {1, 1, 1, 1, 1, 1}));

    CHECK(invert(one(4)) == one(4));

    Laurent walk;
    walk.set(1, 0, 1);
    walk.set(-1, 0, 1);
    const Series f = invert(one(4) - Series::poly(4, {{1, walk}}));
    Laurent expect2; // (x + 1/x)^2
    expect2.set(2, 0, 1);
    expect2.set(0, 0, 2);
    expect2.set(-2, 0, 1);
    CHECK(f.coeff(2) == expect2);

    CHECK_THROWS_AS(invert(Series(3)), NonScalarUnit);
    CHECK_THROWS_AS(invert(Series(3, Laurent::monomial(1, 1, 0))), NonScalarUnit);
    CHECK_THROWS_AS(invert(scal(3, {0, 1})), NonScalarUnit);
}

TEST_CASE("sqrt")
{
    CHECK(sqrt(scal(4, {1, -4})) == scal(4, {1, -2, -2, -4, -10}));
    CHECK(sqrt(one(5)) == one(5));

    const Series opt = scal(6, {1, 1});
    CHECK(sqrt(opt * opt) == opt);

    CHECK_THROWS_AS(sqrt(scal(3, {2})), BadConstantTerm);
    CHECK_THROWS_AS(sqrt(Series(3, Laurent::monomial(1, 0, 1))), BadConstantTerm);
}

TEST_CASE("compose_t")
{
    const Series c = catalan(7);
    const Series g = Series::poly(7, {{2, Laurent(4)}});
    CHECK(compose_t(c, g) == scal(7, {1, 0, 4, 0, 32, 0, 320, 0}));

    const Series f = scal(5, {7, 1, 2});
    CHECK(compose_t(f, Series(5)) == scal(5, {7}));

    // t = s/(1+4s^2): composing the inverse relation with s recovers t.
    const int order = 12;
    const Series z = Series::poly(order, {{1, Laurent(1)}});
    const Series h = z * invert(one(order) + Series::poly(order, {{2, Laurent(4)}}));
    CHECK(compose_t(h, s_series(order)) == z);

    CHECK_THROWS_AS(compose_t(f, scal(5, {1, 1})), NonzeroConstant);
}

TEST_CASE("compose_t accounts for valuation gain")
{
    const Series f = scal(3, {1, 1, 1, 1});
    const Series g = Series::poly(9, {{2, Laurent(1)}});
    const Series r = compose_t(f, g);
    // val(g) = 2 and f carries 4 coefficients, so the result is good to
    // min(9, 2*4 - 1) = 7.
    CHECK(r.order() == 7);
    CHECK(r == scal(7, {1, 0, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("subst_monomial")
{
    const SignedMonomial x_to_xbar{1, -1, 0};
    const SignedMonomial y_to_xy{1, 1, 1};

    const Series xy = Series::monomial(2, 1, 1, 1, 0);
    CHECK(subst_monomial(xy, x_to_xbar, y_to_xy) == Series::monomial(2, 1, 0, 1, 0));

    Rng rng(13);
    const Series f = random_series(rng, 5);
    CHECK(subst_monomial(f, SignedMonomial{1, 1, 0}, SignedMonomial{1, 0, 1}) == f);

    CHECK_THROWS_AS(subst_monomial(f, SignedMonomial{1, 2, 0}, SignedMonomial{1, 0, 1}),
                    NonInvertibleSubstitution);
    CHECK_THROWS_AS(subst_monomial(f, SignedMonomial{0, 1, 0}, SignedMonomial{1, 0, 1}),
                    NonInvertibleSubstitution);
}

TEST_CASE("diagonal bookkeeping of the substituted full gf")
{
    // CT_x S(xbar, xy) collects the diagonal counts a_{i,i}(n) at y^i t^n.
    const Series sub = subst_monomial(slit_gf(2), SignedMonomial{1, -1, 0},
                                      SignedMonomial{1, 1, 1});
    const Series diag = ct(sub, 'x');
    CHECK(diag == diagonal_series(enumerate(2)));
    CHECK(diag.coeff(1).coeff(0, 1) == 0); // a_{1,1}(1) vanishes by parity
    CHECK(diag.coeff(2).coeff(0, 1) == 2); // a_{1,1}(2) = 2
}

TEST_CASE("t_log_derivative")
{
    CHECK(t_log_derivative(scal(3, {0, 0, 1})) == scal(3, {0, 0, 2}));
    CHECK(t_log_derivative(scal(3, {5})) == Series(3));
    CHECK(t_log_derivative(scal(3, {0, 1, 0, 4})) == scal(3, {0, 1, 0, 12}));
}

TEST_CASE("t_log_integrate")
{
    CHECK(t_log_integrate(scal(3, {0, 0, 2})) == scal(3, {0, 0, 1}));
    CHECK(t_log_integrate(scal(3, {0, 1, 0, 12})) == scal(3, {0, 1, 0, 4}));
    CHECK_THROWS_AS(t_log_integrate(scal(3, {1, 1})), NonzeroConstant);

    Rng rng(14);
    for (int k = 0; k < 20; ++k) {
        Series f = random_series(rng, 8);
        f.set_coeff(0, Laurent());
        CHECK(t_log_integrate(t_log_derivative(f)) == f);
    }
}

TEST_CASE("coeff access")
{
    const Series f = scal(2, {1, 3});
    CHECK(f.coeff(1) == Laurent(3));
    CHECK_THROWS_AS(f.coeff(3), OrderExceeded);
    CHECK_THROWS_AS(f.coeff(-1), OrderExceeded);

    Laurent walk;
    walk.set(1, 0, 1);
    walk.set(-1, 0, 1);
    const Series g = invert(one(4) - Series::poly(4, {{1, walk}}));
    CHECK(g.coeff(4).eval_at_one() == 16); // all 4-step one-dimensional walks
    CHECK(g.coeff(4).scalar_part() == 6);  // central binomial C(4,2)
}

TEST_CASE("shift_t")
{
    const Series f = scal(3, {0, 1, 2});
    CHECK(shift_t(f, 1) == scal(4, {0, 0, 1, 2, 0}));
    CHECK(shift_t(f, -1) == scal(2, {1, 2, 0}));
    CHECK_THROWS_AS(shift_t(scal(3, {1}), -1), NonzeroConstant);
}

TEST_CASE("ring axioms on random series")
{
    Rng rng(101);
    for (int k = 0; k < 60; ++k) {
        const int order = static_cast<int>(rng.pick(0, 8));
        const Series a = random_series(rng, order);
        const Series b = random_series(rng, order);
        const Series c = random_series(rng, order);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("sqrt squares back to its argument")
{
    Rng rng(102);
    for (int k = 0; k < 100; ++k) {
        const int order = static_cast<int>(rng.pick(1, 20));
        Series a =
            order <= 8 ? random_series(rng, order) : random_scalar_series(rng, order);
        a.set_coeff(0, Laurent(1));
        const Series r = sqrt(a);
        CHECK(r * r == a);
        CHECK(r.coeff(0) == Laurent(1));
    }
}

TEST_CASE("invert multiplies back to one")
{
    Rng rng(103);
    for (int k = 0; k < 60; ++k) {
        const int order = static_cast<int>(rng.pick(0, 10));
        Series a = random_series(rng, order);
        Rational c0 = rat(rng.pick(1, 9), rng.pick(1, 4));
        if (rng.pick(0, 1))
            c0 = -c0;
        a.set_coeff(0, Laurent(c0));
        CHECK(a * invert(a) == one(order));
    }
}

TEST_CASE("composition is associative for scalar series")
{
    Rng rng(104);
    for (int k = 0; k < 50; ++k) {
        const int order = static_cast<int>(rng.pick(1, 16));
        const Series f = random_scalar_series(rng, order);
        Series g = random_scalar_series(rng, order);
        Series h = random_scalar_series(rng, order);
        g.set_coeff(0, Laurent());
        h.set_coeff(0, Laurent());
        const Series lhs = compose_t(compose_t(f, g), h);
        const Series rhs = compose_t(f, compose_t(g, h));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact Laurent division")
{
    Laurent p; // (x + y)(1/x + 1/y) = 2 + x/y + y/x
    p.set(0, 0, 2);
    p.set(1, -1, 1);
    p.set(-1, 1, 1);
    Laurent d;
    d.set(1, 0, 1);
    d.set(0, 1, 1);
    Laurent q; // 1/x + 1/y
    q.set(-1, 0, 1);
    q.set(0, -1, 1);
    CHECK(p.div_exact(d) == q);

    Laurent bad;
    bad.set(0, 0, 1);
    bad.set(1, 0, 3);
    CHECK_THROWS_AS(p.div_exact(bad), ExactDivisionError);

    Rng rng(105);
    for (int k = 0; k < 40; ++k) {
        Laurent a = random_laurent(rng, 4, 3);
        Laurent b = random_laurent(rng, 4, 3);
        if (b.is_zero())
            b.set(0, 0, 1);
        if (a.is_zero())
            continue;
        CHECK((a * b).div_exact(b) == a);
    }
}

TEST_CASE("rational helpers")
{
    CHECK(rat(6, 8) == rat(3, 4));
    CHECK(rat(3, -4) == rat(-3, 4));
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial_rat(rat(3, 2), 0) == 1);
    CHECK(binomial_rat(rat(7, 2), 1) == rat(7, 2));
    CHECK(binomial_rat(rat(1, 2), 2) == rat(-1, 8));
    CHECK(to_string(rat(-3, 7)) == "-3/7");
    CHECK(to_string(rat(5, 1)) == "5");
}
