#pragma once

#include "slitplane/series.hpp"

namespace slitplane {

// A constant-term problem CT_x [ x / (x - t G(x,t)) * F(x,t) ]. G and F must
// be free of negative x-exponents; their coefficients may involve y and 1/y.
struct KernelProblem {
    Series G;
    Series F;
    int order;
};

// Substitute the series X (positive t-valuation expected) for the variable x
// in f, which must be polynomial in x. Horner evaluation over the series ring.
Series subst_x(const Series& f, const Series& X);

// The unique X in t*R[[t]] with X = t G(X, t), modulo t^(order+1), computed
// by fixed-point iteration (one t-order gained per pass). An optional seed
// overrides the zero starting point; any seed with positive valuation
// converges to the same series.
Series solve_fixed_point(const Series& G, int order);
Series solve_fixed_point(const Series& G, int order, const Series& seed);

// Closed-form evaluation F(X,t) / (1 - t dG/dx|_{x=X}).
Series kernel_ct(const KernelProblem& p);

// Reference evaluation: expand x/(x - tG) = sum_k (tG/x)^k, multiply by F,
// take the constant term in x. The independent oracle for kernel_ct.
Series kernel_ct_direct(const KernelProblem& p);

} // namespace slitplane
