#include "hurwitz/polynomial.hpp"

#include <stdexcept>

namespace hurwitz {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs, char var)
    : c_(std::move(coeffs)), var_(var)
{
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c, char var)
{
    return UnivariatePolynomial(std::vector<Rational>{c}, var);
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, int k, char var)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UnivariatePolynomial(v, var);
}

void UnivariatePolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UnivariatePolynomial::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return 0;
    return c_[k];
}

Rational UnivariatePolynomial::operator()(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& o) const
{
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return UnivariatePolynomial(v, var_);
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& o) const
{
    return *this + o * Rational(-1);
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& o) const
{
    if (is_zero() || o.is_zero())
        return UnivariatePolynomial(var_);
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    return UnivariatePolynomial(v, var_);
}

UnivariatePolynomial UnivariatePolynomial::operator*(const Rational& s) const
{
    std::vector<Rational> v = c_;
    for (auto& x : v)
        x *= s;
    return UnivariatePolynomial(v, var_);
}

std::string UnivariatePolynomial::str() const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[k];
        if (a == 0)
            continue;
        std::string t = to_string(abs(a));
        bool neg = a < 0;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (k == 0)
            s += t;
        else {
            if (abs(a) != 1)
                s += t + "*";
            s += var_;
            if (k > 1)
                s += "^" + std::to_string(k);
        }
    }
    return s;
}

UnivariatePolynomial binomial_poly(long a, long k, char var)
{
    if (k < 0)
        return UnivariatePolynomial(var);
    UnivariatePolynomial p = UnivariatePolynomial::constant(1, var);
    for (long i = 0; i < k; ++i)
        p = p * UnivariatePolynomial(std::vector<Rational>{Rational(-a - i), Rational(1)}, var);
    return p * make_rational(1, factorial(k));
}

UnivariatePolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& pts, char var)
{
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (pts[i].first == pts[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa " + to_string(pts[i].first));
    UnivariatePolynomial result(var);
    for (size_t i = 0; i < pts.size(); ++i) {
        UnivariatePolynomial basis = UnivariatePolynomial::constant(1, var);
        Rational denom = 1;
        for (size_t j = 0; j < pts.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * UnivariatePolynomial(std::vector<Rational>{-pts[j].first, Rational(1)}, var);
            denom *= pts[i].first - pts[j].first;
        }
        result = result + basis * (pts[i].second / denom);
    }
    return result;
}

} // namespace hurwitz
