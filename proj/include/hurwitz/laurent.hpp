#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/polynomial.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hurwitz {

// m_{λ;λ'}: λ gives the exponents of the numerator, λ' those of the denominator.
struct MonomialShape {
    Partition lambda;
    Partition lambda_prime;

    int weight() const { return lambda.size() + lambda_prime.size(); }
    int length() const { return lambda.length() + lambda_prime.length(); }
    std::string str() const;     // "m_{2,1;1}", ε for empty parts
    auto operator<=>(const MonomialShape&) const = default;
};

// Σ c_{λ;λ'} m_{λ;λ'}; zero coefficients are never stored.
class SymmetricLaurentExpansion {
public:
    void add(const MonomialShape& s, const Rational& c);
    Rational coeff(const MonomialShape& s) const;
    const std::map<MonomialShape, Rational>& terms() const { return terms_; }
    bool operator==(const SymmetricLaurentExpansion& o) const { return terms_ == o.terms_; }
    Rational evaluate(const std::vector<Rational>& x) const;

private:
    std::map<MonomialShape, Rational> terms_;
};

// Coefficients that are polynomials in the number of variables m.
class SymbolicLaurentExpansion {
public:
    void add(const MonomialShape& s, const UnivariatePolynomial& c);
    UnivariatePolynomial coeff(const MonomialShape& s) const;
    const std::map<MonomialShape, UnivariatePolynomial>& terms() const { return terms_; }
    SymmetricLaurentExpansion at(long m) const;
    Rational evaluate(const std::vector<Rational>& x) const;

private:
    std::map<MonomialShape, UnivariatePolynomial> terms_;
};

Rational eval_monomial_sym(const MonomialShape& shape, const std::vector<Rational>& x);

// All shapes with |λ|+|λ'| <= bound and ℓ(λ)+ℓ(λ') <= nvars.
std::vector<MonomialShape> monomial_shapes(int bound, int nvars);

using SymmetricFunction = std::function<Rational(const std::vector<Rational>&)>;

// Solves for c_{λ;λ'} from samples at vectors of distinct primes and checks the
// result at 20 independent points. Throws if the residual is nonzero.
SymmetricLaurentExpansion decompose_to_monomial_basis(const SymmetricFunction& f, int nvars, int bound,
                                                      unsigned seed = 12345);

SymmetricLaurentExpansion resum_over_subsets(const SymmetricLaurentExpansion& e, int k, long m);
SymbolicLaurentExpansion resum_over_subsets_symbolic(const SymmetricLaurentExpansion& e, int k);

nlohmann::json to_json(const SymmetricLaurentExpansion& e);
nlohmann::json to_json(const SymbolicLaurentExpansion& e);

// Gaussian elimination over Q. Returns false if A is singular.
bool solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b, std::vector<Rational>& x);

} // namespace hurwitz
