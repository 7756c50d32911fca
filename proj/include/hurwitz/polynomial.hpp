#pragma once

#include "hurwitz/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

class UnivariatePolynomial {
public:
    UnivariatePolynomial(char var = 'z') : var_(var) {}
    UnivariatePolynomial(std::vector<Rational> coeffs, char var = 'z');
    static UnivariatePolynomial constant(const Rational& c, char var = 'z');
    static UnivariatePolynomial monomial(const Rational& c, int k, char var = 'z');

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    char var() const { return var_; }
    Rational operator()(const Rational& x) const;

    UnivariatePolynomial operator+(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator-(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator*(const Rational& s) const;
    bool operator==(const UnivariatePolynomial& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
    char var_;
};

// Binomial C(var - a, k) as a polynomial in var.
UnivariatePolynomial binomial_poly(long a, long k, char var);

// Unique polynomial of degree < n through n points with distinct abscissas.
UnivariatePolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& pts, char var = 'z');

} // namespace hurwitz
