#pragma once

#include <gmpxx.h>

#include <string>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Integer factorial(long n);
// d (d-1) ... (d-k+1); zero when k > d >= 0
Integer falling_factorial(long d, long k);
Rational falling_factorial(const Rational& x, long k);
Integer binomial(long n, long k);
Integer ipow(const Integer& b, long e);
Rational rpow(const Rational& b, long e);   // e may be negative

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);   // "p/q" or "p"
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& x);

} // namespace hurwitz
