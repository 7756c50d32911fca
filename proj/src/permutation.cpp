#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

Permutation::Permutation(int d) : img_(d)
{
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> img) : img_(std::move(img))
{
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[x])
            throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Permutation Permutation::transposition(int d, int a, int b)
{
    if (a == b || a < 0 || b < 0 || a >= d || b >= d)
        throw std::invalid_argument("bad transposition");
    Permutation p(d);
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Permutation Permutation::from_cycles(int d, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(d, 0);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) {
            int x = c[i] - 1;
            if (x < 0 || x >= d || used[x])
                throw std::invalid_argument("bad cycle notation");
            used[x] = 1;
            img[x] = c[(i + 1) % c.size()] - 1;
        }
    return Permutation(img);
}

Permutation Permutation::operator*(const Permutation& q) const
{
    if (q.degree() != degree())
        throw std::invalid_argument("degree mismatch in product");
    std::vector<int> r(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
        r[x] = q.img_[img_[x]];
    return Permutation(r);
}

Permutation Permutation::inverse() const
{
    std::vector<int> r(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
        r[img_[x]] = static_cast<int>(x);
    return Permutation(r);
}

bool Permutation::is_identity() const
{
    for (size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x))
            return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int s = 0; s < degree(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> c;
        for (int x = s; !seen[x]; x = img_[x]) {
            seen[x] = 1;
            c.push_back(x);
        }
        out.push_back(c);
    }
    return out;
}

std::string Permutation::str() const
{
    std::string s;
    for (const auto& c : cycles()) {
        if (c.size() == 1)
            continue;
        s += "(";
        for (size_t i = 0; i < c.size(); ++i)
            s += (i ? " " : "") + std::to_string(c[i] + 1);
        s += ")";
    }
    return s.empty() ? "()" : s;
}

Partition cycle_type(const Permutation& p)
{
    std::vector<int> lens;
    for (const auto& c : p.cycles())
        lens.push_back(static_cast<int>(c.size()));
    return Partition(lens);
}

bool is_transitive(const std::vector<Permutation>& perms, int d)
{
    if (d <= 0)
        return false;
    std::vector<char> seen(d, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& p : perms) {
            int y = p(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == d;
}

void validate_factorization(const Factorization& f)
{
    int d = f.degree;
    if (f.sigma.degree() != d || f.rho.degree() != d)
        throw std::invalid_argument("factorization: degree mismatch");
    Permutation prod(d);
    for (const auto& t : f.taus) {
        if (t.degree() != d || cycle_type(t) != Partition({2}).complete_to(d))
            throw std::invalid_argument("factorization: factor is not a transposition");
        prod = prod * t;
    }
    prod = prod * f.sigma * f.rho;
    if (!prod.is_identity())
        throw std::invalid_argument("factorization: product is not the identity");
    std::vector<Permutation> all = f.taus;
    all.push_back(f.sigma);
    all.push_back(f.rho);
    if (!is_transitive(all, d))
        throw std::invalid_argument("factorization: not transitive");
}

HurwitzValueSet values_from_hbullet(const Partition& mu, const Partition& nu, int g, const Rational& hb)
{
    HurwitzValueSet v;
    v.mu = mu;
    v.nu = nu;
    v.g = g;
    v.d = mu.size();
    v.r = hurwitz_r(mu, nu, g);
    v.h_bullet = hb;
    Rational hl = hb * Rational(factorial(v.d - 1));
    if (!is_integer(hl))
        throw std::logic_error("labeled count is not an integer");
    v.h_labeled = hl.get_num();
    v.h = hb / v.d;
    v.h_bar = hb * Rational(aut(mu) * aut(nu)) / Rational(factorial(v.r));
    return v;
}

HurwitzValueSet values_from_hbar(const Partition& mu, const Partition& nu, int g, const Rational& hbar)
{
    int r = hurwitz_r(mu, nu, g);
    return values_from_hbullet(mu, nu, g, hbar * Rational(factorial(r)) / Rational(aut(mu) * aut(nu)));
}

HurwitzValueSet hurwitz_values(const Partition& mu, const Partition& nu, int g, std::uint64_t budget)
{
    Integer hl = count_labeled_factorizations(mu, nu, g, budget);
    int d = mu.size();
    return values_from_hbullet(mu, nu, g, Rational(hl) / Rational(factorial(d - 1)));
}

} // namespace hurwitz
