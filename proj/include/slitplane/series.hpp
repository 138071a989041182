#pragma once

#include "slitplane/laurent.hpp"

#include <initializer_list>
#include <vector>

namespace slitplane {

// Truncated formal power series in t with Laurent coefficients: the value is
// known modulo t^(order+1), and coeffs always holds exactly order+1 entries.
// Binary operations truncate to the smaller operand order and never extend
// precision.
class Series {
public:
    explicit Series(int order);
    Series(int order, const Laurent& constant);

    // c * x^ex * y^ey * t^tpow, at the given order.
    static Series monomial(int order, const Rational& c, int ex, int ey, int tpow);
    // Convenience builder from (t-power, coefficient) pairs.
    static Series poly(int order, std::initializer_list<std::pair<int, Laurent>> terms);

    int order() const { return order_; }
    const Laurent& coeff(int n) const; // throws OrderExceeded outside 0..order
    void set_coeff(int n, Laurent c);

    // Index of the first nonzero coefficient; order+1 for the zero series.
    int valuation() const;
    bool is_zero() const { return valuation() > order_; }

    Series truncated(int new_order) const; // new_order <= order

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b); // Cauchy product
    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Structural equality: same order and identical coefficients.
    friend bool operator==(const Series&, const Series&) = default;

    Series scaled(const Rational& c) const;
    Series scaled(const Laurent& c) const;

    bool all_scalar() const; // every coefficient free of x and y

private:
    int order_;
    std::vector<Laurent> coeffs_;
};

// Multiplicative inverse. The t^0 coefficient must be a nonzero scalar
// rational; throws NonScalarUnit otherwise.
Series invert(const Series& a);

// Square root with constant term 1, by the order-by-order recurrence.
// Throws BadConstantTerm unless the t^0 coefficient is the scalar 1.
Series sqrt(const Series& a);

// f(g(t)). Requires val(g) >= 1 (NonzeroConstant otherwise) and either f or
// g to have scalar coefficients. The result order accounts for the valuation
// gain: min(g.order, val(g)*(f.order+1) - 1).
Series compose_t(const Series& f, const Series& g);

// Rewrite x -> x_img, y -> y_img termwise; the exponent matrix of the images
// must be unimodular (NonInvertibleSubstitution otherwise).
Series subst_monomial(const Series& f, const SignedMonomial& x_img,
                      const SignedMonomial& y_img);

// t d/dt: the t^n coefficient is multiplied by n.
Series t_log_derivative(const Series& f);

// Left inverse of t_log_derivative; requires a zero t^0 coefficient.
Series t_log_integrate(const Series& f);

// Multiply by t^k. For k < 0 the first -k coefficients must vanish
// (NonzeroConstant otherwise). The order shifts by k with the content.
Series shift_t(const Series& f, int k);

// Constant-term operator in one variable: keeps the terms whose exponent in
// var ('x' or 'y') is zero.
Series ct(const Series& f, char var);

// Coefficientwise slice at a fixed exponent of one variable (dropped).
Series slice_x(const Series& f, int k);
Series slice_y(const Series& f, int k);

Series truncate_y(const Series& f, int lo, int hi);

// Exact coefficientwise division by a Laurent polynomial.
Series div_exact(const Series& f, const Laurent& d);

// base^e by repeated multiplication, e >= 0.
Series pow_series(const Series& base, int e);

// Coefficientwise formal d/dx.
Series dx(const Series& f);

} // namespace slitplane
