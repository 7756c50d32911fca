#include "hurwitz/formulas.hpp"

#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

namespace {

long total(const Composition& c)
{
    return std::accumulate(c.begin(), c.end(), 0L);
}

Rational pow_ratio(long x, long k)   // (x)_k / x^k
{
    return Rational(falling_factorial(x, k)) / Rational(ipow(Integer(x), k));
}

// Calls f on every weak composition of e into k parts.
void weak_compositions(int e, int k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> v(k, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
            v[i] = left;
            f(v);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            v[i] = a;
            rec(i + 1, left - a);
        }
    };
    if (k == 0) {
        if (e == 0)
            f(v);
        return;
    }
    rec(0, e);
}

} // namespace

Rational hurwitz_formula(const Partition& mu, int d)
{
    if (mu.size() != d)
        throw std::invalid_argument("hurwitz_formula: |mu| must equal d");
    const int m = mu.length();
    Rational r = rpow(Rational(d), m - 2) * Rational(factorial(d + m - 2));
    for (int i = 1; i <= d; ++i) {
        int mi = mu.multiplicity(i);
        if (!mi)
            continue;
        r /= Rational(factorial(mi));
        r *= rpow(Rational(ipow(Integer(i), i)) / Rational(factorial(i)), mi);
    }
    return r;
}

Integer mobile_count_formula(const Partition& mu, int d)
{
    if (mu.size() != d)
        throw std::invalid_argument("mobile_count_formula: |mu| must equal d");
    const int m = mu.length();
    Rational r = Rational(binomial(d + m - 1, m - 1));
    r *= Rational(factorial(m)) / Rational(aut(mu)) / m;   // (1/m) multinomial
    r *= rpow(Rational(d), m - 2) * Rational(factorial(d));
    for (int p : mu.parts())
        r *= Rational(ipow(Integer(p), p)) / Rational(factorial(p));
    if (!is_integer(r))
        throw std::logic_error("mobile_count_formula: non-integer count");
    return r.get_num();
}

Rational star_formula(const Composition& x)
{
    return rpow(Rational(total(x)), static_cast<long>(x.size()) - 1);
}

Rational simple_formula(const Composition& x)
{
    long d = total(x);
    Rational r = Rational(factorial(d)) * rpow(Rational(d), static_cast<long>(x.size()) - 2);
    for (int v : x)
        r *= Rational(ipow(Integer(v), v)) / Rational(factorial(v));
    return r;
}

Rational p_term(const BareShape& s, const std::vector<int>& eps, const Composition& x, const Composition& y)
{
    std::vector<int> ew(s.m, 0), eb(s.n, 0);
    for (int j = 0; j < s.num_edges(); ++j) {
        ew[s.edges[j].first] += eps[j];
        eb[s.edges[j].second] += eps[j];
    }
    Rational r = 1;
    for (int i = 0; i < s.m; ++i) {
        Integer f = falling_factorial(x[i], s.white_degree[i] + ew[i]);
        if (f == 0)
            return 0;
        r *= Rational(f) / Rational(ipow(Integer(x[i]), 1 + ew[i]));
    }
    for (int i = 0; i < s.n; ++i) {
        Integer f = falling_factorial(y[i], s.black_degree[i] + eb[i]);
        if (f == 0)
            return 0;
        r *= Rational(f) / Rational(ipow(Integer(y[i]), 1 + eb[i]));
    }
    for (const auto& c : s.components) {
        long a = 0;
        for (int w : c.whites)
            a += x[w];
        for (int b : c.blacks)
            a += y[b];
        for (int j : c.edges)
            a -= 1 + eps[j];
        r *= a;
    }
    return r;
}

Rational q_term(int k, int e, const Composition& x, const Composition& y)
{
    Rational total_q = 0;
    const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
    for (const auto& s : enumerate_bare_shapes(m, n, true)) {
        if (s.num_edges() != k)
            continue;
        weak_compositions(e, k, [&](const std::vector<int>& eps) { total_q += p_term(s, eps, x, y); });
    }
    return total_q;
}

Rational kz_value(const Composition& x, const Composition& y, int d)
{
    const long X = total(x), Y = total(y);
    if (X < Y)
        throw std::invalid_argument("kz_value: requires |x| >= |y|");
    if (d < X)
        throw std::invalid_argument("kz_value: requires d >= |x|");
    for (int v : x)
        if (v <= 0)
            throw std::invalid_argument("kz_value: parts must be positive");
    for (int v : y)
        if (v <= 0)
            throw std::invalid_argument("kz_value: parts must be positive");
    const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
    const int kmax = std::max(0, m + n - 1);
    const Rational D(d);
    Rational sum = 0;
    for (int k = 0; k <= kmax; ++k) {
        for (int e = 0; e + k <= X; ++e) {
            Rational q = q_term(k, e, x, y);
            if (e > Y - k) {
                if (q != 0)
                    throw std::logic_error("kz_value: a term beyond the excess bound does not vanish");
                continue;
            }
            long a = X + Y - k - e;
            sum += rpow(D, -k) * pow_ratio(d, a) * q;
        }
    }
    Rational pre = Rational(factorial(d - X)) * Rational(factorial(d - Y));
    for (int v : x)
        pre *= Rational(ipow(Integer(v), v)) / Rational(factorial(v));
    for (int v : y)
        pre *= Rational(ipow(Integer(v), v)) / Rational(factorial(v));
    pre *= rpow(D, d + m + n - 2) / Rational(factorial(d));
    return pre * sum;
}

Rational explicit_two_parts(int alpha, int beta, int d)
{
    if (!(alpha >= beta && beta >= 2 && d >= alpha))
        throw std::invalid_argument("explicit_two_parts: requires alpha >= beta >= 2 and d >= alpha");
    const Rational D(d);
    Rational bracket = pow_ratio(d, alpha + beta);
    Rational inner = 0;
    for (int l = 1; l <= beta; ++l)
        inner += pow_ratio(d, alpha + beta - l) * pow_ratio(alpha, l) * pow_ratio(beta, l) * (alpha + beta - l);
    bracket += inner / D;
    Rational r = Rational(factorial(2L * d - alpha - beta)) * rpow(D, d - 1) / Rational(factorial(d));
    r *= Rational(ipow(Integer(alpha), alpha)) / Rational(factorial(alpha));
    r *= Rational(ipow(Integer(beta), beta)) / Rational(factorial(beta));
    return r * bracket;
}

Rational hbar_from_h(const Partition& mu, const Partition& nu, int g, const Rational& h)
{
    int r = hurwitz_r(mu, nu, g);
    return Rational(aut(mu) * aut(nu) * mu.size()) * h / Rational(factorial(r));
}

Rational h_from_hbar(const Partition& mu, const Partition& nu, int g, const Rational& hbar)
{
    int r = hurwitz_r(mu, nu, g);
    return hbar * Rational(factorial(r)) / Rational(aut(mu) * aut(nu) * mu.size());
}

Rational kz_normalized(const Partition& mu, const Partition& nu, int d)
{
    const int a = mu.size(), b = nu.size(), m = mu.length(), n = nu.length();
    auto full_mu = mu.complete_to(d), full_nu = nu.complete_to(d);
    Rational hbar = a >= b ? kz_value(mu.parts(), nu.parts(), d) : kz_value(nu.parts(), mu.parts(), d);
    Rational h = h_from_hbar(full_mu, full_nu, 0, hbar);
    const Rational D(d);
    Rational q = h / Rational(factorial(m + n + 2L * d - a - b - 2));
    q *= Rational(factorial(d)) / rpow(D, d + m + n - 3);
    q /= pow_ratio(d, a);
    q *= Rational(aut(mu) * aut(nu));
    return q;
}

KzFit kz_polynomial(const Partition& mu, const Partition& nu)
{
    if (mu.size() < nu.size())
        throw std::invalid_argument("kz_polynomial: requires |mu| >= |nu|");
    if (mu.multiplicity(1) || nu.multiplicity(1) || mu.length() == 0 || nu.length() == 0)
        throw std::invalid_argument("kz_polynomial: seed partitions must be nonempty without parts equal to one");
    KzFit fit;
    const int a = mu.size(), b = nu.size();
    std::vector<std::pair<Rational, Rational>> pts;
    for (int d = a; d < a + b + 2; ++d) {
        fit.sample_d.push_back(d);
        pts.push_back({Rational(1, d), kz_normalized(mu, nu, d)});
    }
    for (auto& p : pts)
        p.first.canonicalize();
    fit.q = interpolate(pts, 'z');
    fit.residual_zero = true;
    for (int d = a + b + 2; d < a + b + 4; ++d) {
        fit.heldout_d.push_back(d);
        Rational z(1, d);
        z.canonicalize();
        if (fit.q(z) != kz_normalized(mu, nu, d))
            fit.residual_zero = false;
    }
    if (!fit.residual_zero)
        throw std::runtime_error("kz_polynomial: held-out value does not lie on the interpolant");
    return fit;
}

} // namespace hurwitz
