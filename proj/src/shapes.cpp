#include "hurwitz/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
    bool unite(int a, int b)
    {
        a = find(a), b = find(b);
        if (a == b)
            return false;
        p[a] = b;
        return true;
    }
};

Integer sum_over(const std::vector<int>& idx, const Composition& v)
{
    Integer s = 0;
    for (int i : idx)
        s += v[i];
    return s;
}

} // namespace

bool BareShape::has_isolated_vertex() const
{
    for (int k : white_degree)
        if (k == 0)
            return true;
    for (int k : black_degree)
        if (k == 0)
            return true;
    return false;
}

void BareShape::finalize()
{
    std::sort(edges.begin(), edges.end());
    white_degree.assign(m, 0);
    black_degree.assign(n, 0);
    UnionFind uf(m + n);
    for (auto [w, b] : edges) {
        if (w < 0 || w >= m || b < 0 || b >= n)
            throw std::invalid_argument("shape edge out of range");
        if (!uf.unite(w, m + b))
            throw std::invalid_argument("shape has a cycle");
        ++white_degree[w];
        ++black_degree[b];
    }
    components.clear();
    component_of_white.assign(m, -1);
    component_of_black.assign(n, -1);
    std::vector<int> comp_of_root(m + n, -1);
    for (int v = 0; v < m + n; ++v) {
        int root = uf.find(v);
        if (comp_of_root[root] < 0) {
            comp_of_root[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        int c = comp_of_root[root];
        if (v < m) {
            components[c].whites.push_back(v);
            component_of_white[v] = c;
        } else {
            components[c].blacks.push_back(v - m);
            component_of_black[v - m] = c;
        }
    }
    for (int j = 0; j < num_edges(); ++j)
        components[component_of_white[edges[j].first]].edges.push_back(j);

    side_whites.assign(edges.size(), {});
    side_blacks.assign(edges.size(), {});
    for (int j = 0; j < num_edges(); ++j) {
        // vertices reachable from the white end without crossing edge j
        std::vector<char> seen(m + n, 0);
        std::vector<int> stack{edges[j].first};
        seen[edges[j].first] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int k = 0; k < num_edges(); ++k) {
                if (k == j)
                    continue;
                int a = edges[k].first, b = m + edges[k].second;
                int other = v == a ? b : v == b ? a : -1;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    stack.push_back(other);
                }
            }
        }
        for (int v = 0; v < m + n; ++v)
            if (seen[v])
                (v < m ? side_whites[j] : side_blacks[j]).push_back(v < m ? v : v - m);
    }
}

std::string BareShape::str() const
{
    std::ostringstream o;
    o << "{";
    for (size_t j = 0; j < edges.size(); ++j)
        o << (j ? "," : "") << "w" << edges[j].first + 1 << "b" << edges[j].second + 1;
    o << "}";
    return o.str();
}

std::vector<BareShape> enumerate_bare_shapes(int m, int n, bool allow_isolated)
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("shape sizes must be nonnegative");
    if (m * n > 24)
        throw std::invalid_argument("too many candidate edges for full shape enumeration");
    std::vector<std::pair<int, int>> all;
    for (int w = 0; w < m; ++w)
        for (int b = 0; b < n; ++b)
            all.push_back({w, b});
    std::vector<BareShape> out;
    std::vector<std::pair<int, int>> chosen;
    std::function<void(size_t, UnionFind)> rec = [&](size_t i, UnionFind uf) {
        if (i == all.size()) {
            BareShape s;
            s.m = m;
            s.n = n;
            s.edges = chosen;
            s.finalize();
            if (allow_isolated || !s.has_isolated_vertex())
                out.push_back(std::move(s));
            return;
        }
        UnionFind with = uf;
        if (with.unite(all[i].first, m + all[i].second)) {
            chosen.push_back(all[i]);
            rec(i + 1, with);
            chosen.pop_back();
        }
        rec(i + 1, uf);
    };
    rec(0, UnionFind(m + n));
    std::sort(out.begin(), out.end(), [](const BareShape& a, const BareShape& b) { return a.edges < b.edges; });
    return out;
}

RegionMembership region_membership(const BareShape& s, const Composition& x, const Composition& y)
{
    if (static_cast<int>(x.size()) != s.m || static_cast<int>(y.size()) != s.n)
        throw std::invalid_argument("region_membership: composition lengths do not match the shape");
    RegionMembership r;
    r.inside = true;
    for (int j = 0; j < s.num_edges(); ++j) {
        Integer l = sum_over(s.side_whites[j], x) - sum_over(s.side_blacks[j], y);
        r.weights.push_back(l);
        if (l <= 0)
            r.inside = false;
    }
    for (const auto& c : s.components)
        if (sum_over(c.whites, x) != sum_over(c.blacks, y))
            r.inside = false;
    if (r.inside) {
        // the same weights seen from the black side
        for (int j = 0; j < s.num_edges(); ++j) {
            const auto& comp = s.components[s.component_of_white[s.edges[j].first]];
            Integer from_black = (sum_over(comp.blacks, y) - sum_over(s.side_blacks[j], y)) -
                                 (sum_over(comp.whites, x) - sum_over(s.side_whites[j], x));
            if (from_black != r.weights[j])
                throw std::logic_error("region_membership: white and black weights disagree");
        }
    }
    return r;
}

Rational shape_contribution(const BareShape& s, const Composition& x, const Composition& y)
{
    long d = std::accumulate(x.begin(), x.end(), 0L);
    Rational r = rpow(Rational(d), s.num_components() - 2);
    for (int i = 0; i < s.m; ++i)
        r *= rpow(Rational(x[i]), s.white_degree[i] - 1);
    for (int i = 0; i < s.n; ++i)
        r *= rpow(Rational(y[i]), s.black_degree[i] - 1);
    for (const auto& c : s.components)
        r *= Rational(sum_over(c.whites, x));
    return r;
}

std::vector<BareShape> active_shapes(const Composition& x, const Composition& y)
{
    const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
    if (std::accumulate(x.begin(), x.end(), 0L) != std::accumulate(y.begin(), y.end(), 0L))
        throw std::invalid_argument("x and y must have the same size");
    for (int v : x)
        if (v <= 0)
            throw std::invalid_argument("parts must be positive");
    for (int v : y)
        if (v <= 0)
            throw std::invalid_argument("parts must be positive");
    std::vector<BareShape> out;
    std::vector<int> rx = x, ry = y;
    std::vector<std::pair<int, int>> chosen;
    // candidate edge index i = w*n + b; weights are forced, so each shape appears once
    std::function<void(int, UnionFind&)> rec = [&](int i, UnionFind& uf) {
        if (i == m * n) {
            for (int v : ry)
                if (v)
                    return;
            BareShape s;
            s.m = m;
            s.n = n;
            s.edges = chosen;
            s.finalize();
            out.push_back(std::move(s));
            return;
        }
        int w = i / n, b = i % n;
        bool last_for_white = b == n - 1;
        if (!(last_for_white && rx[w] != 0))
            rec(i + 1, uf);
        int cap = std::min(rx[w], ry[b]);
        if (cap == 0)
            return;
        if (last_for_white && rx[w] > ry[b])
            return;
        UnionFind with = uf;
        if (!with.unite(w, m + b))
            return;
        chosen.push_back({w, b});
        for (int l = last_for_white ? rx[w] : 1; l <= cap; ++l) {
            rx[w] -= l;
            ry[b] -= l;
            rec(i + 1, with);
            rx[w] += l;
            ry[b] += l;
        }
        chosen.pop_back();
    };
    UnionFind uf(m + n);
    rec(0, uf);
    // one shape may arise from several weightings only if weights were not forced
    std::sort(out.begin(), out.end(), [](const BareShape& a, const BareShape& b) { return a.edges < b.edges; });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            throw std::logic_error("active_shapes: a shape has two weightings");
    return out;
}

Rational barh0_shapes(const Composition& x, const Composition& y)
{
    if (x.empty() || y.empty())
        throw std::invalid_argument("barh0_shapes: compositions must be nonempty");
    Rational total = 0;
    for (const auto& s : active_shapes(x, y))
        total += shape_contribution(s, x, y);
    return total;
}

std::vector<std::pair<unsigned, unsigned>> resonance_hyperplanes(int m, int n)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned I = 1; I + 1 < (1u << m); ++I)
        for (unsigned J = 1; J + 1 < (1u << n); ++J)
            out.push_back({I, J});
    return out;
}

std::vector<int> sign_vector(const Composition& x, const Composition& y)
{
    std::vector<int> out;
    for (auto [I, J] : resonance_hyperplanes(static_cast<int>(x.size()), static_cast<int>(y.size()))) {
        long s = 0;
        for (size_t i = 0; i < x.size(); ++i)
            if (I >> i & 1)
                s += x[i];
        for (size_t j = 0; j < y.size(); ++j)
            if (J >> j & 1)
                s -= y[j];
        out.push_back(s > 0 ? 1 : s < 0 ? -1 : 0);
    }
    return out;
}

ChamberPolynomial chamber_polynomial(const Composition& x, const Composition& y)
{
    if (std::accumulate(x.begin(), x.end(), 0L) != std::accumulate(y.begin(), y.end(), 0L))
        throw std::invalid_argument("x and y must have the same size");
    ChamberPolynomial P;
    P.x = x;
    P.y = y;
    P.sign_vector = sign_vector(x, y);
    for (int s : P.sign_vector)
        if (s == 0)
            throw std::invalid_argument("resonance point; use barh0_shapes");
    const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
    for (const auto& s : enumerate_bare_shapes(m, n, false)) {
        if (s.num_components() != 1 || !region_membership(s, x, y).inside)
            continue;
        std::vector<int> e;
        for (int k : s.white_degree)
            e.push_back(k - 1);
        for (int k : s.black_degree)
            e.push_back(k - 1);
        P.monomials.push_back(e);
        P.shapes.push_back(s);
    }
    return P;
}

Rational ChamberPolynomial::evaluate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) const
{
    Rational total = 0;
    for (const auto& e : monomials) {
        Rational t = 1;
        for (size_t i = 0; i < xs.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                t *= xs[i];
        for (size_t j = 0; j < ys.size(); ++j)
            for (int k = 0; k < e[xs.size() + j]; ++k)
                t *= ys[j];
        total += t;
    }
    return total;
}

std::string ChamberPolynomial::str() const
{
    if (monomials.empty())
        return "0";
    std::vector<std::string> terms;
    const size_t m = x.size();
    for (const auto& e : monomials) {
        std::string t;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!t.empty())
                t += "*";
            t += (i < m ? "x" : "y") + std::to_string(i < m ? i + 1 : i - m + 1);
            if (e[i] > 1)
                t += "^" + std::to_string(e[i]);
        }
        terms.push_back(t.empty() ? "1" : t);
    }
    // distinct trees can share a degree sequence; collect them
    std::map<std::string, int> collected;
    for (const auto& t : terms)
        ++collected[t];
    std::string out;
    for (const auto& [t, c] : collected) {
        if (!out.empty())
            out += " + ";
        out += c == 1 ? t : (t == "1" ? std::to_string(c) : std::to_string(c) + "*" + t);
    }
    return out;
}

nlohmann::json to_json(const BareShape& s)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [w, b] : s.edges)
        edges.push_back({w + 1, b + 1});
    return {{"m", s.m}, {"n", s.n}, {"edges", edges}, {"components", s.num_components()}};
}

nlohmann::json to_json(const ChamberPolynomial& p)
{
    return {{"sample", {{"x", p.x}, {"y", p.y}}},
            {"sign_vector", p.sign_vector},
            {"monomials", p.monomials},
            {"polynomial", p.str()}};
}

} // namespace hurwitz
