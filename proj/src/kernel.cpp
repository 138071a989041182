#include "slitplane/kernel.hpp"

#include "slitplane/errors.hpp"

#include <algorithm>

namespace slitplane {

namespace {

int x_degree(const Series& f)
{
    int deg = 0;
    for (int n = 0; n <= f.order(); ++n) {
        const Laurent& c = f.coeff(n);
        if (c.is_zero())
            continue;
        if (c.min_ex() < 0)
            throw DomainError("series is not polynomial in x");
        deg = std::max(deg, c.max_ex());
    }
    return deg;
}

} // namespace

Series subst_x(const Series& f, const Series& X)
{
    const int deg = x_degree(f);
    const int order = std::min(f.order(), X.order());
    const Series Xt = X.order() == order ? X : X.truncated(order);

    Series r = slice_x(f, deg).truncated(order);
    for (int k = deg - 1; k >= 0; --k) {
        r = r * Xt;
        r += slice_x(f, k).truncated(order);
    }
    return r;
}

Series solve_fixed_point(const Series& G, int order)
{
    return solve_fixed_point(G, order, Series(order));
}

Series solve_fixed_point(const Series& G, int order, const Series& seed)
{
    const Series Gt = G.order() > order ? G.truncated(order) : G;
    if (Gt.order() < order)
        throw OrderExceeded("solve_fixed_point: G has insufficient order");
    if (seed.order() < order)
        throw OrderExceeded("solve_fixed_point: seed has insufficient order");
    if (!seed.is_zero() && seed.valuation() < 1)
        throw NonzeroConstant("solve_fixed_point: seed must have positive valuation");

    Series X = seed.truncated(order);
    for (int pass = 0; pass <= order; ++pass) {
        Series next = shift_t(subst_x(Gt, X), 1).truncated(order);
        if (next == X)
            break;
        X = std::move(next);
    }
    return X;
}

Series kernel_ct(const KernelProblem& p)
{
    const Series G = p.G.truncated(std::min(p.G.order(), p.order));
    const Series F = p.F.truncated(std::min(p.F.order(), p.order));
    const Series X = solve_fixed_point(G, p.order);

    const Series numer = subst_x(F, X);
    Series denom(p.order, Laurent(1));
    denom -= shift_t(subst_x(dx(G), X), 1).truncated(p.order);
    return numer * invert(denom);
}

Series kernel_ct_direct(const KernelProblem& p)
{
    const Series G = p.G.truncated(std::min(p.G.order(), p.order));
    const Series F = p.F.truncated(std::min(p.F.order(), p.order));
    x_degree(G); // validates the no-negative-x invariant
    x_degree(F);

    const Series tG = shift_t(G, 1).truncated(p.order);
    Series result(p.order);
    Series power = F; // F * (tG)^k
    for (int k = 0; k <= p.order; ++k) {
        result += slice_x(power, k);
        if (power.is_zero())
            break;
        power = power * tG;
    }
    return result;
}

} // namespace slitplane
