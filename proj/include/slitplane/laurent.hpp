#pragma once

#include "slitplane/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace slitplane {

// Exponent pair of one monomial x^ex * y^ey. Exponents may be negative.
struct Monomial {
    int ex = 0;
    int ey = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Image of a variable under a monomial substitution: sign * x^ex * y^ey.
struct SignedMonomial {
    int sign = 1; // +1 or -1
    int ex = 0;
    int ey = 0;
};

// Sparse Laurent polynomial in x, y over Rational. Terms with coefficient
// zero are never stored, so operator== is structural equality.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c);
    Laurent(long c);
    static Laurent monomial(const Rational& c, int ex, int ey);
    static Laurent from_map(std::map<Monomial, Rational> m); // prunes zeros

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const; // no term with a nonzero exponent
    Rational scalar_part() const; // coefficient at (0, 0)
    Rational coeff(int ex, int ey) const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void set(int ex, int ey, const Rational& c);

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator-() const;
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent&, const Laurent&) = default;

    Laurent scaled(const Rational& c) const;

    // Keep only the terms with zero exponent in var ('x' or 'y').
    Laurent ct(char var) const;
    // Terms with ex == k, x-exponent dropped.
    Laurent slice_x(int k) const;
    // Terms with ey == k, y-exponent dropped.
    Laurent slice_y(int k) const;
    // Keep terms with lo <= ey <= hi.
    Laurent truncate_y(int lo, int hi) const;
    // Exponent-linear substitution x -> x_img, y -> y_img.
    Laurent subst(const SignedMonomial& x_img, const SignedMonomial& y_img) const;
    // Formal d/dx: c x^a y^b -> c*a x^(a-1) y^b.
    Laurent dx() const;

    int min_ex() const; // throws DomainError on the zero polynomial
    int max_ex() const;
    int min_ey() const;
    int max_ey() const;

    // Exact division in the Laurent ring; throws ExactDivisionError when
    // the divisor does not divide exactly.
    Laurent div_exact(const Laurent& d) const;

    // Value at x = 1, y = 1 (the coefficient sum).
    Rational eval_at_one() const;

private:
    std::map<Monomial, Rational> terms_;
};

std::string to_string(const Laurent& p);

} // namespace slitplane
