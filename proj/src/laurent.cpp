#include "hurwitz/laurent.hpp"

#include <random>
#include <stdexcept>

namespace hurwitz {

std::string MonomialShape::str() const
{
    auto part = [](const Partition& p) { return p.empty() ? std::string("ε") : p.str(); };
    return "m_{" + part(lambda) + ";" + part(lambda_prime) + "}";
}

void SymmetricLaurentExpansion::add(const MonomialShape& s, const Rational& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Rational SymmetricLaurentExpansion::coeff(const MonomialShape& s) const
{
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SymmetricLaurentExpansion::evaluate(const std::vector<Rational>& x) const
{
    Rational r = 0;
    for (const auto& [s, c] : terms_)
        r += c * eval_monomial_sym(s, x);
    return r;
}

void SymbolicLaurentExpansion::add(const MonomialShape& s, const UnivariatePolynomial& c)
{
    auto it = terms_.find(s);
    UnivariatePolynomial v = it == terms_.end() ? c : it->second + c;
    if (it != terms_.end())
        terms_.erase(it);
    if (!v.is_zero())
        terms_.emplace(s, v);
}

UnivariatePolynomial SymbolicLaurentExpansion::coeff(const MonomialShape& s) const
{
    auto it = terms_.find(s);
    return it == terms_.end() ? UnivariatePolynomial('m') : it->second;
}

SymmetricLaurentExpansion SymbolicLaurentExpansion::at(long m) const
{
    SymmetricLaurentExpansion e;
    for (const auto& [s, p] : terms_)
        e.add(s, p(Rational(m)));
    return e;
}

Rational SymbolicLaurentExpansion::evaluate(const std::vector<Rational>& x) const
{
    return at(static_cast<long>(x.size())).evaluate(x);
}

namespace {

// Σ over injective index choices of ∏ x^{λ} / ∏ x^{λ'}; divided by Aut afterwards.
Rational injective_sum(const std::vector<int>& exps, size_t pos, std::vector<char>& used,
                       const std::vector<Rational>& x)
{
    if (pos == exps.size())
        return 1;
    Rational total = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (used[i])
            continue;
        used[i] = 1;
        total += rpow(x[i], exps[pos]) * injective_sum(exps, pos + 1, used, x);
        used[i] = 0;
    }
    return total;
}

} // namespace

Rational eval_monomial_sym(const MonomialShape& shape, const std::vector<Rational>& x)
{
    for (const auto& v : x)
        if (v == 0)
            throw std::domain_error("eval_monomial_sym: zero variable");
    if (shape.length() > static_cast<int>(x.size()))
        return 0;
    std::vector<int> exps = shape.lambda.parts();
    for (int p : shape.lambda_prime.parts())
        exps.push_back(-p);
    std::vector<char> used(x.size(), 0);
    Rational s = injective_sum(exps, 0, used, x);
    return s / Rational(aut(shape.lambda) * aut(shape.lambda_prime));
}

std::vector<MonomialShape> monomial_shapes(int bound, int nvars)
{
    std::vector<MonomialShape> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b)
            for (const auto& l : partitions_of(a))
                for (const auto& lp : partitions_of(b))
                    if (l.length() + lp.length() <= nvars)
                        out.push_back({l, lp});
    return out;
}

bool solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b, std::vector<Rational>& x)
{
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0)
            ++piv;
        if (piv == n)
            return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0)
                continue;
            Rational f = A[row][col] / A[col][col];
            for (size_t k = col; k < n; ++k)
                A[row][k] -= f * A[col][k];
            b[row] -= f * b[col];
        }
    }
    x.assign(n, 0);
    for (size_t i = 0; i < n; ++i)
        x[i] = b[i] / A[i][i];
    return true;
}

SymmetricLaurentExpansion decompose_to_monomial_basis(const SymmetricFunction& f, int nvars, int bound,
                                                      unsigned seed)
{
    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
    const int np = sizeof(primes) / sizeof(primes[0]);
    if (nvars > np)
        throw std::invalid_argument("decompose_to_monomial_basis: too many variables");
    std::vector<MonomialShape> shapes = monomial_shapes(bound, nvars);
    size_t n = shapes.size();
    std::mt19937 rng(seed);

    auto sample_point = [&]() {
        std::vector<int> idx(np);
        for (int i = 0; i < np; ++i)
            idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<Rational> x(nvars);
        for (int i = 0; i < nvars; ++i)
            x[i] = primes[idx[i]];
        return x;
    };

    std::vector<Rational> c;
    bool solved = false;
    for (int attempt = 0; attempt < 20 && !solved; ++attempt) {
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        for (size_t i = 0; i < n; ++i) {
            auto x = sample_point();
            std::vector<Rational> row;
            for (const auto& s : shapes)
                row.push_back(eval_monomial_sym(s, x));
            A.push_back(row);
            b.push_back(f(x));
        }
        solved = solve_linear(A, b, c);
    }
    if (!solved)
        throw std::runtime_error("decompose_to_monomial_basis: sample system stayed singular");

    SymmetricLaurentExpansion e;
    for (size_t i = 0; i < n; ++i)
        e.add(shapes[i], c[i]);

    std::mt19937 check_rng(seed ^ 0x9e3779b9u);
    std::uniform_int_distribution<int> num(1, 97), den(1, 13);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> x(nvars);
        for (auto& v : x)
            v = make_rational(num(check_rng), den(check_rng));
        if (e.evaluate(x) != f(x))
            throw std::runtime_error("decompose_to_monomial_basis: nonzero residual "
                                     "(input not symmetric or bound too small)");
    }
    return e;
}

SymmetricLaurentExpansion resum_over_subsets(const SymmetricLaurentExpansion& e, int k, long m)
{
    if (m < k)
        throw std::invalid_argument("resum_over_subsets: m < k");
    SymmetricLaurentExpansion out;
    for (const auto& [s, c] : e.terms())
        out.add(s, c * Rational(binomial(m - s.length(), k - s.length())));
    return out;
}

SymbolicLaurentExpansion resum_over_subsets_symbolic(const SymmetricLaurentExpansion& e, int k)
{
    SymbolicLaurentExpansion out;
    for (const auto& [s, c] : e.terms())
        out.add(s, binomial_poly(s.length(), k - s.length(), 'm') * c);
    return out;
}

static nlohmann::json shape_json(const MonomialShape& s)
{
    return {{"lambda", s.lambda.parts()}, {"lambda_prime", s.lambda_prime.parts()}};
}

nlohmann::json to_json(const SymmetricLaurentExpansion& e)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [s, c] : e.terms()) {
        auto j = shape_json(s);
        j["coeff"] = to_string(c);
        a.push_back(j);
    }
    return a;
}

nlohmann::json to_json(const SymbolicLaurentExpansion& e)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [s, p] : e.terms()) {
        auto j = shape_json(s);
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : p.coeffs())
            cs.push_back(to_string(c));
        j["coeff"] = p.str();
        j["coeff_in_m"] = cs;
        a.push_back(j);
    }
    return a;
}

} // namespace hurwitz
