#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(long n)
{
    if (n < 0)
        throw std::domain_error("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer falling_factorial(long d, long k)
{
    if (k < 0)
        throw std::domain_error("negative falling factorial length");
    Integer r = 1;
    for (long i = 0; i < k; ++i)
        r *= d - i;
    return r;
}

Rational falling_factorial(const Rational& x, long k)
{
    if (k < 0)
        throw std::domain_error("negative falling factorial length");
    Rational r = 1;
    for (long i = 0; i < k; ++i)
        r *= x - i;
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer ipow(const Integer& b, long e)
{
    if (e < 0)
        throw std::domain_error("negative exponent for integer power");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational rpow(const Rational& b, long e)
{
    if (e >= 0)
        return make_rational(ipow(b.get_num(), e), ipow(b.get_den(), e));
    if (b == 0)
        throw std::domain_error("zero to a negative power");
    return make_rational(ipow(b.get_den(), -e), ipow(b.get_num(), -e));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

} // namespace hurwitz
