#include "slitplane/series.hpp"

#include "slitplane/errors.hpp"

#include <algorithm>
#include <utility>

namespace slitplane {

Series::Series(int order) : order_(order)
{
    if (order < 0)
        throw DomainError("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(int order, const Laurent& constant) : Series(order)
{
    coeffs_[0] = constant;
}

Series Series::monomial(int order, const Rational& c, int ex, int ey, int tpow)
{
    Series s(order);
    if (tpow < 0)
        throw DomainError("negative t-power");
    if (tpow <= order)
        s.coeffs_[static_cast<std::size_t>(tpow)] = Laurent::monomial(c, ex, ey);
    return s;
}

Series Series::poly(int order, std::initializer_list<std::pair<int, Laurent>> terms)
{
    Series s(order);
    for (const auto& [n, c] : terms) {
        if (n < 0)
            throw DomainError("negative t-power");
        if (n <= order)
            s.coeffs_[static_cast<std::size_t>(n)] += c;
    }
    return s;
}

const Laurent& Series::coeff(int n) const
{
    if (n < 0 || n > order_)
        throw OrderExceeded("coefficient index " + std::to_string(n) +
                            " outside 0.." + std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(int n, Laurent c)
{
    if (n < 0 || n > order_)
        throw OrderExceeded("coefficient index " + std::to_string(n) +
                            " outside 0.." + std::to_string(order_));
    coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

int Series::valuation() const
{
    for (int n = 0; n <= order_; ++n)
        if (!coeffs_[static_cast<std::size_t>(n)].is_zero())
            return n;
    return order_ + 1;
}

Series Series::truncated(int new_order) const
{
    if (new_order > order_)
        throw OrderExceeded("cannot extend a truncated series");
    Series r(new_order);
    for (int n = 0; n <= new_order; ++n)
        r.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
    return r;
}

Series& Series::operator+=(const Series& o)
{
    if (o.order_ < order_)
        *this = truncated(o.order_);
    for (int n = 0; n <= order_; ++n)
        coeffs_[static_cast<std::size_t>(n)] += o.coeffs_[static_cast<std::size_t>(n)];
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    if (o.order_ < order_)
        *this = truncated(o.order_);
    for (int n = 0; n <= order_; ++n)
        coeffs_[static_cast<std::size_t>(n)] -= o.coeffs_[static_cast<std::size_t>(n)];
    return *this;
}

Series Series::operator-() const
{
    Series r(order_);
    for (int n = 0; n <= order_; ++n)
        r.coeffs_[static_cast<std::size_t>(n)] = -coeffs_[static_cast<std::size_t>(n)];
    return r;
}

Series operator+(const Series& a, const Series& b)
{
    Series r = a;
    r += b;
    return r;
}

Series operator-(const Series& a, const Series& b)
{
    Series r = a;
    r -= b;
    return r;
}

Series operator*(const Series& a, const Series& b)
{
    const int order = std::min(a.order_, b.order_);
    Series r(order);
    for (int n = 0; n <= order; ++n) {
        std::map<Monomial, Rational> acc;
        for (int k = 0; k <= n; ++k) {
            const Laurent& ak = a.coeffs_[static_cast<std::size_t>(k)];
            const Laurent& bk = b.coeffs_[static_cast<std::size_t>(n - k)];
            if (ak.is_zero() || bk.is_zero())
                continue;
            for (const auto& [ma, ca] : ak.terms()) {
                for (const auto& [mb, cb] : bk.terms()) {
                    Monomial m{ma.ex + mb.ex, ma.ey + mb.ey};
                    auto [it, inserted] = acc.emplace(m, ca * cb);
                    if (!inserted)
                        it->second += ca * cb;
                }
            }
        }
        r.coeffs_[static_cast<std::size_t>(n)] = Laurent::from_map(std::move(acc));
    }
    return r;
}

Series Series::scaled(const Rational& c) const
{
    Series r(order_);
    for (int n = 0; n <= order_; ++n)
        r.coeffs_[static_cast<std::size_t>(n)] =
            coeffs_[static_cast<std::size_t>(n)].scaled(c);
    return r;
}

Series Series::scaled(const Laurent& c) const
{
    Series r(order_);
    for (int n = 0; n <= order_; ++n)
        r.coeffs_[static_cast<std::size_t>(n)] =
            coeffs_[static_cast<std::size_t>(n)] * c;
    return r;
}

bool Series::all_scalar() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Laurent& c) { return c.is_scalar(); });
}

Series invert(const Series& a)
{
    const Laurent& a0 = a.coeff(0);
    if (!a0.is_scalar() || a0.is_zero())
        throw NonScalarUnit("invert: t^0 coefficient must be a nonzero scalar");
    const Rational c0 = a0.scalar_part();
    const Rational inv0 = Rational(1) / c0;

    Series b(a.order(), Laurent(inv0));
    for (int n = 1; n <= a.order(); ++n) {
        Laurent s;
        for (int k = 1; k <= n; ++k)
            s += a.coeff(k) * b.coeff(n - k);
        b.set_coeff(n, s.scaled(-inv0));
    }
    return b;
}

Series sqrt(const Series& a)
{
    const Laurent one(1);
    if (!(a.coeff(0) == one))
        throw BadConstantTerm("sqrt: t^0 coefficient must be 1");

    Series r(a.order(), one);
    const Rational half(1, 2);
    for (int n = 1; n <= a.order(); ++n) {
        Laurent s = a.coeff(n);
        for (int k = 1; k < n; ++k)
            s -= r.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, s.scaled(half));
    }
    return r;
}

Series compose_t(const Series& f, const Series& g)
{
    const int v = g.valuation();
    if (v == 0)
        throw NonzeroConstant("compose_t: substituted series must have zero constant term");
    if (!f.all_scalar() && !g.all_scalar())
        throw SeriesError("compose_t: one operand must have scalar coefficients");

    if (v > g.order()) // g vanishes identically to its order
        return Series(g.order(), f.coeff(0));

    const long gained = static_cast<long>(v) * (f.order() + 1) - 1;
    const int order = static_cast<int>(std::min<long>(g.order(), gained));
    const Series gt = g.order() == order ? g : g.truncated(order);

    const int kmax = std::min(f.order(), order / v);
    Series r(order, f.coeff(kmax));
    for (int k = kmax - 1; k >= 0; --k) {
        r = r * gt;
        r += Series(order, f.coeff(k));
    }
    return r;
}

Series subst_monomial(const Series& f, const SignedMonomial& x_img,
                      const SignedMonomial& y_img)
{
    if ((x_img.sign != 1 && x_img.sign != -1) || (y_img.sign != 1 && y_img.sign != -1))
        throw NonInvertibleSubstitution("image signs must be +1 or -1");
    const long det = static_cast<long>(x_img.ex) * y_img.ey -
                     static_cast<long>(x_img.ey) * y_img.ex;
    if (det != 1 && det != -1)
        throw NonInvertibleSubstitution("exponent matrix is not unimodular");

    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).subst(x_img, y_img));
    return r;
}

Series t_log_derivative(const Series& f)
{
    Series r(f.order());
    for (int n = 1; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).scaled(n));
    return r;
}

Series t_log_integrate(const Series& f)
{
    if (!f.coeff(0).is_zero())
        throw NonzeroConstant("t_log_integrate: t^0 coefficient must vanish");
    Series r(f.order());
    for (int n = 1; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).scaled(rat(1, n)));
    return r;
}

Series shift_t(const Series& f, int k)
{
    if (k == 0)
        return f;
    const int order = f.order() + k;
    if (order < 0)
        throw DomainError("shift_t: resulting order is negative");
    if (k < 0 && f.valuation() < -k)
        throw NonzeroConstant("shift_t: cannot divide below the valuation");

    Series r(order);
    for (int n = 0; n <= f.order(); ++n) {
        const int m = n + k;
        if (m >= 0 && m <= order)
            r.set_coeff(m, f.coeff(n));
    }
    return r;
}

Series ct(const Series& f, char var)
{
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).ct(var));
    return r;
}

Series slice_x(const Series& f, int k)
{
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).slice_x(k));
    return r;
}

Series slice_y(const Series& f, int k)
{
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).slice_y(k));
    return r;
}

Series truncate_y(const Series& f, int lo, int hi)
{
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).truncate_y(lo, hi));
    return r;
}

Series div_exact(const Series& f, const Laurent& d)
{
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).div_exact(d));
    return r;
}

Series dx(const Series& f)
{
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n)
        r.set_coeff(n, f.coeff(n).dx());
    return r;
}

Series pow_series(const Series& base, int e)
{
    if (e < 0)
        throw DomainError("pow_series: negative exponent");
    Series r(base.order(), Laurent(1));
    for (int k = 0; k < e; ++k)
        r = r * base;
    return r;
}

} // namespace slitplane
