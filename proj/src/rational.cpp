#include "slitplane/rational.hpp"

#include "slitplane/errors.hpp"

namespace slitplane {

Rational rat(long num, long den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k)
{
    if (n < 0)
        throw DomainError("binomial: negative top");
    if (k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Rational binomial_rat(const Rational& top, long k)
{
    if (k < 0)
        return 0;
    Rational num = 1;
    for (long j = 0; j < k; ++j)
        num *= top - j;
    return num / Rational(factorial(k));
}

Integer factorial(long n)
{
    if (n < 0)
        throw DomainError("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer pow_int(long base, unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e & 1))
        r = -r;
    return r;
}

Rational pow_rat(const Rational& base, unsigned long e)
{
    Rational r = 1;
    Rational b = base;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1)
            r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace slitplane
