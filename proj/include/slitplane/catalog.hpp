#pragma once

#include "slitplane/series.hpp"

#include <string>
#include <vector>

namespace slitplane {

// Builders for the named generating functions of the slit-plane walk model.
// Every builder returns a series of exactly the requested order.

// Catalan generating function C(t) = (1 - sqrt(1-4t)) / (2t).
Series catalan(int order);
// C(-t).
Series catalan_neg(int order);

// u = t C(t) C(-t) = (sqrt(1+4t) - 1) / (sqrt(1-4t) + 1). Both defining
// expressions are computed and must agree.
Series u_series(int order);

// s = t C(4 t^2); also the generating function of walks ending at (0, 1).
Series s_series(int order);

// Complete generating function S(x,y;t): the x^i y^j t^n coefficient counts
// n-step slit-plane walks to (i, j).
Series slit_gf(int order);

// Diagonal generating function F(y;t): the y^i t^(2n) coefficient is
// a_{i,i}(2n).
Series diag_gf(int order);

// The strictly-negative-diagonal part: y^i t^(2n) holds a_{-i,-i}(2n), i >= 1.
Series diag_gf_minus(int order);
// The strictly-positive-diagonal part: y^i t^(2n) holds a_{i,i}(2n), i >= 1.
Series diag_gf_plus(int order);

// (1/2)((1 - 4 s^2 y)^(-1/2) - 1): the exact difference series
// a_{i,i}(2n) - a_{-i,-i}(2n) at y^i t^(2n).
Series diag_delta(int order);

// The power-series root X of the diagonal kernel x = t(x^2(1+y) + 1 + 1/y),
// in quadratic-formula form (1 - sqrt(1 - 4t^2(1+y)^2/y)) / (2t(1+y)).
Series kernel_root(int order);

Series sqrt_one_minus_4t(int order);
Series sqrt_one_plus_4t(int order);

// Closed form for a_{-i,-i}(2n), i >= 1, n >= i:
// (i/(2n)) binom(2i,i) binom(n+i,2i) binom(4n,2n) / binom(2n+2i,2i).
Integer lower_diagonal_count(int i, long n);

// a_{i,i}(2n) = lower_diagonal_count + the diag_delta coefficient.
Integer upper_diagonal_count(int i, long n);
Integer upper_diagonal_count(int i, long n, const Series& delta);

// The quoted closed form for the same difference, 4^n (i/n) binom(2i,i)
// binom(2n,n-i), kept for the known-discrepancy report: it disagrees with
// enumeration (i = n = 1 gives 8 where the true difference is 1).
Integer quoted_upper_diag_term(int i, long n);

// Coefficient of y^i t^(2n) in a delta-shaped series.
Rational delta_coefficient(const Series& delta, int i, int n);

// Scalar series in t whose t^(2n) coefficient is a_{-i,-i}(2n), evaluated
// from the u-form slice expression
// (-1)^i (1-u^2)^(1-2i) sum_{k=i}^{2i-1} binom(2i-1,k) (-1)^k u^(2k).
Series lower_diag_slice_u_form(int i, int order);

struct NamedSeries {
    std::string name;
    Series series;
    std::string description;
};

// Catalog identifiers: C, C_neg, u, s, S, F, F_plus, F_minus, X_kernel, Delta.
NamedSeries named_series(const std::string& name, int order);
std::vector<std::string> series_catalog();

} // namespace slitplane
