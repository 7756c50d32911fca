#include "hurwitz/formulas.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

namespace {

// Calls f on every composition of total into k positive parts.
void compositions(int total, int k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> v(k);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
            if (left >= 1) {
                v[i] = left;
                f(v);
            }
            return;
        }
        for (int a = 1; a <= left - (k - 1 - i); ++a) {
            v[i] = a;
            rec(i + 1, left - a);
        }
    };
    if (k >= 1)
        rec(0, total);
}

void subsets(int m, int p, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> idx(p);
    std::function<void(int, int)> rec = [&](int i, int from) {
        if (i == p) {
            f(idx);
            return;
        }
        for (int a = from; a <= m - (p - i); ++a) {
            idx[i] = a;
            rec(i + 1, a + 1);
        }
    };
    rec(0, 0);
}

Rational prefactor(const Composition& x)
{
    Rational r = 1;
    for (int v : x)
        r *= Rational(ipow(Integer(v), v)) / Rational(factorial(v));
    return r;
}

// Σ_{(s,ε) ∈ S(y)} d^{m+n-2-|s|} ∏ y_i^{d•_i-1} Σ_I P̃_{s,ε}(x_I), for rational x.
Rational strict_sum(const std::vector<Rational>& x, const Composition& y, const std::vector<WeightedStrictShape>& shapes)
{
    const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
    Rational d = 0;
    for (const auto& v : x)
        d += v;
    Rational out = 0;
    for (const auto& ws : shapes) {
        const auto& s = ws.shape;
        const int p = s.m;
        if (p > m)
            continue;
        std::vector<int> wsum(p, 0);
        for (int j = 0; j < s.num_edges(); ++j)
            wsum[s.edges[j].first] += ws.weights[j];
        Rational coef = rpow(d, m + n - 2 - s.num_edges());
        for (int b = 0; b < n; ++b)
            coef *= rpow(Rational(y[b]), s.black_degree[b] - 1);
        Rational inner = 0;
        subsets(m, p, [&](const std::vector<int>& I) {
            Rational t = 1;
            for (int i = 0; i < p; ++i) {
                // (X)_{d°+ε°}/X^{1+ε°} with d°+ε° the weight at white i
                int excess = wsum[i] - s.white_degree[i];
                t *= falling_factorial(x[I[i]], wsum[i]) / rpow(x[I[i]], 1 + excess);
                if (t == 0)
                    return;
            }
            for (const auto& c : s.components) {
                Rational a = 0;
                for (int w : c.whites)
                    a += x[I[w]];
                t *= a;
            }
            inner += t;
        });
        out += coef * inner;
    }
    return out;
}

} // namespace

std::vector<WeightedStrictShape> strict_shapes(const Composition& y)
{
    const int n = static_cast<int>(y.size());
    const int Y = std::accumulate(y.begin(), y.end(), 0);
    for (int v : y)
        if (v <= 0)
            throw std::invalid_argument("strict_shapes: parts must be positive");
    std::vector<WeightedStrictShape> out;
    for (int p = 1; p <= Y; ++p) {
        for (const auto& s : enumerate_bare_shapes(p, n, false)) {
            if (s.num_edges() > Y)
                continue;
            // edges grouped by black vertex; weights at black b compose y_b
            std::vector<std::vector<int>> at(n);
            for (int j = 0; j < s.num_edges(); ++j)
                at[s.edges[j].second].push_back(j);
            std::vector<int> w(s.num_edges(), 0);
            std::function<void(int)> rec = [&](int b) {
                if (b == n) {
                    out.push_back({s, w});
                    return;
                }
                compositions(y[b], static_cast<int>(at[b].size()), [&](const std::vector<int>& c) {
                    for (size_t t = 0; t < c.size(); ++t)
                        w[at[b][t]] = c[t];
                    rec(b + 1);
                });
            };
            rec(0);
        }
    }
    return out;
}

Rational almost_simple_normalized(const Composition& x, const Composition& y)
{
    const long X = std::accumulate(x.begin(), x.end(), 0L), Y = std::accumulate(y.begin(), y.end(), 0L);
    if (X < Y)
        throw std::invalid_argument("almost_simple: requires |x| >= |y|");
    for (int v : x)
        if (v <= 0)
            throw std::invalid_argument("almost_simple: parts must be positive");
    std::vector<Rational> xr(x.begin(), x.end());
    if (y.empty())
        return prefactor(x) * rpow(Rational(X), static_cast<long>(x.size()) - 2);
    return prefactor(x) * strict_sum(xr, y, strict_shapes(y));
}

Rational almost_simple(const Composition& x, const Composition& y)
{
    const long X = std::accumulate(x.begin(), x.end(), 0L), Y = std::accumulate(y.begin(), y.end(), 0L);
    if (X < Y)
        throw std::invalid_argument("almost_simple: requires |x| >= |y|");
    return almost_simple_normalized(x, y) * Rational(factorial(X - Y));
}

Rational beta_star_formula(const Composition& x, int beta)
{
    const int m = static_cast<int>(x.size());
    const long d = std::accumulate(x.begin(), x.end(), 0L);
    if (beta < 1 || d < beta)
        throw std::invalid_argument("beta_star_formula: requires 1 <= beta <= |x|");
    const Rational D(d);
    Rational sum = 0;
    for (int k = 1; k <= beta; ++k) {
        Rational over_subsets = 0;
        subsets(m, k, [&](const std::vector<int>& I) {
            Rational xs = 0;
            for (int i : I)
                xs += x[i];
            Rational comp_sum = 0;
            compositions(beta, k, [&](const std::vector<int>& l) {
                Rational t = 1;
                for (int j = 0; j < k; ++j)
                    t *= Rational(falling_factorial(x[I[j]], l[j])) / Rational(ipow(Integer(x[I[j]]), l[j]));
                comp_sum += t;
            });
            over_subsets += xs * comp_sum;
        });
        sum += rpow(Rational(beta), k - 1) / rpow(D, k) * over_subsets;
    }
    return prefactor(x) * rpow(D, m - 1) * sum;
}

SymbolicLaurentExpansion almost_simple_expansion(const Composition& y)
{
    const int Y = std::accumulate(y.begin(), y.end(), 0);
    if (Y < 1)
        throw std::invalid_argument("almost_simple_expansion: |y| must be at least 1");
    const int n = static_cast<int>(y.size());
    const auto shapes = strict_shapes(y);
    const int bound = Y - 1;
    const int degree = Y;   // q(m) has degree at most |y|
    // monomials of length L vanish for m < L, so each coefficient is fitted on m >= max(L,1)
    const int max_len = bound;
    const int m_max = std::max(max_len, 1) + degree + 1;
    std::map<int, SymmetricLaurentExpansion> by_m;
    for (int m = 1; m <= m_max; ++m) {
        SymmetricFunction f = [&](const std::vector<Rational>& x) -> Rational {
            Rational d = 0;
            for (const auto& v : x)
                d += v;
            return strict_sum(x, y, shapes) / rpow(d, m + n - 1 - Y);
        };
        by_m[m] = decompose_to_monomial_basis(f, m, bound, 1000u + m);
    }
    SymbolicLaurentExpansion out;
    for (const auto& shape : monomial_shapes(bound, m_max)) {
        const int L = std::max(shape.length(), 1);
        std::vector<std::pair<Rational, Rational>> pts;
        for (int m = L; m <= L + degree; ++m)
            pts.push_back({Rational(m), by_m[m].coeff(shape)});
        auto q = interpolate(pts, 'm');
        for (int m = L + degree + 1; m <= m_max; ++m)
            if (q(Rational(m)) != by_m[m].coeff(shape))
                throw std::runtime_error("almost_simple_expansion: coefficient is not a polynomial of degree <= |y| in m");
        if (!q.is_zero())
            out.add(shape, q);
    }
    return out;
}

} // namespace hurwitz
