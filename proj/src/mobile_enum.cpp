// Free mobiles are tree-like: a free face-labeled mobile is a tree on the m+n
// labeled polygons (no black-black edge) whose weights are forced by the
// polygon sizes, plus a choice of attachment node for each edge end.
#include "hurwitz/mobile.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace hurwitz {

namespace {

std::uint64_t sat_pow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (b && r > std::numeric_limits<std::uint64_t>::max() / b)
            return std::numeric_limits<std::uint64_t>::max();
        r *= b;
    }
    return r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t tree_count(int P) { return P < 2 ? 1 : sat_pow(P, P - 2); }

// Calls f(edges, weights) for every weighted tree compatible with the sizes.
template <class F>
void for_each_weighted_tree(const Composition& x, const Composition& y, F&& f)
{
    const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size()), P = m + n;
    std::vector<int> size(x);
    size.insert(size.end(), y.begin(), y.end());
    std::vector<std::pair<int, int>> edges(P - 1);
    std::vector<int> weight(P - 1), seq(std::max(0, P - 2), 0), deg(P), req(P);
    std::vector<std::vector<int>> inc(P);

    while (true) {
        // Prüfer decoding
        std::fill(deg.begin(), deg.end(), 1);
        for (int s : seq)
            ++deg[s];
        for (int i = 0; i < P - 2; ++i) {
            int leaf = 0;
            while (deg[leaf] != 1)
                ++leaf;
            edges[i] = {leaf, seq[i]};
            --deg[leaf];
            --deg[seq[i]];
        }
        {
            int u = -1, v = -1;
            for (int i = 0; i < P; ++i)
                if (deg[i] == 1)
                    (u < 0 ? u : v) = i;
            edges[P - 2] = {u, v};
        }

        bool ok = true;
        for (auto& [u, v] : edges) {
            if (u > v)
                std::swap(u, v);
            if (u >= m)
                ok = false;   // black-black
        }
        if (ok) {
            for (int i = 0; i < P; ++i) {
                inc[i].clear();
                req[i] = size[i];
            }
            for (int e = 0; e < P - 1; ++e) {
                auto [u, v] = edges[e];
                weight[e] = 0;
                if (v >= m) {
                    inc[u].push_back(e);
                    inc[v].push_back(e);
                }
            }
            std::vector<int> live(P), stack;
            for (int i = 0; i < P; ++i) {
                live[i] = static_cast<int>(inc[i].size());
                if (live[i] == 1)
                    stack.push_back(i);
            }
            std::vector<char> done(P - 1, 0);
            while (ok && !stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (live[v] != 1)
                    continue;
                int e = -1;
                for (int c : inc[v])
                    if (!done[c])
                        e = c;
                int u = edges[e].first == v ? edges[e].second : edges[e].first;
                if (req[v] < 1) {
                    ok = false;
                    break;
                }
                weight[e] = req[v];
                req[u] -= req[v];
                req[v] = 0;
                done[e] = 1;
                --live[v];
                if (--live[u] == 1)
                    stack.push_back(u);
            }
            for (int i = 0; ok && i < P; ++i)
                if (req[i] != 0)
                    ok = false;
            if (ok)
                f(edges, weight);
        }

        int i = 0;
        while (i < P - 2 && ++seq[i] == P)
            seq[i++] = 0;
        if (i == P - 2)
            break;
    }
}

} // namespace

std::uint64_t mobile_enumeration_cost(const Partition& mu, const Partition& nu, bool edge_labeled)
{
    int P = mu.length() + nu.length();
    std::uint64_t c = tree_count(P);
    if (edge_labeled)
        for (int k = 2; k <= P - 1; ++k)
            c = sat_mul(c, k);
    return c;
}

static void check_mobile_budget(std::uint64_t cost, std::uint64_t budget)
{
    if (cost > budget)
        throw std::runtime_error("mobile enumeration budget exceeded: " + std::to_string(cost) + " > " +
                                 std::to_string(budget));
}

Integer count_face_labeled_mobiles(const Composition& x, const Composition& y, std::uint64_t budget)
{
    if (x.empty() || y.empty())
        throw std::invalid_argument("mobiles need at least one polygon of each color");
    check_mobile_budget(tree_count(static_cast<int>(x.size() + y.size())), budget);
    std::vector<int> size(x);
    size.insert(size.end(), y.begin(), y.end());
    Integer total = 0;
    for_each_weighted_tree(x, y, [&](const std::vector<std::pair<int, int>>& edges, const std::vector<int>&) {
        std::vector<int> deg(size.size(), 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        Integer term = 1;
        for (size_t p = 0; p < size.size(); ++p)
            term *= ipow(size[p], deg[p] - 1);
        total += term;
    });
    return total;
}

std::uint64_t enumerate_face_labeled_mobiles(const Composition& x, const Composition& y,
                                             const std::function<void(const HurwitzMobile&)>& sink,
                                             std::uint64_t budget)
{
    if (x.empty() || y.empty())
        throw std::invalid_argument("mobiles need at least one polygon of each color");
    const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size()), P = m + n;
    check_mobile_budget(tree_count(P), budget);
    std::vector<int> size(x), offset(P);
    size.insert(size.end(), y.begin(), y.end());
    for (int p = 0, wo = 0, bo = 0; p < P; ++p) {
        int& o = p < m ? wo : bo;
        offset[p] = o;
        o += size[p];
    }
    HurwitzMobile base;
    for (int p = 0; p < P; ++p) {
        std::vector<int> nodes(size[p]);
        for (int k = 0; k < size[p]; ++k)
            nodes[k] = offset[p] + k;
        (p < m ? base.white_polygons : base.black_polygons).push_back(nodes);
    }
    std::uint64_t count = 0;
    for_each_weighted_tree(x, y, [&](const std::vector<std::pair<int, int>>& edges, const std::vector<int>& weight) {
        // edge ends: (edge, side); the first end at each polygon is pinned to node 0
        std::vector<std::vector<std::pair<int, int>>> ends(P);
        for (size_t e = 0; e < edges.size(); ++e) {
            ends[edges[e].first].push_back({static_cast<int>(e), 0});
            ends[edges[e].second].push_back({static_cast<int>(e), 1});
        }
        std::vector<std::pair<int, int>> free_ends;   // (polygon, index in ends)
        for (int p = 0; p < P; ++p)
            for (size_t i = 1; i < ends[p].size(); ++i)
                free_ends.push_back({p, static_cast<int>(i)});
        std::vector<int> pos(free_ends.size(), 0);
        while (true) {
            std::vector<std::array<int, 2>> at(edges.size(), {0, 0});
            for (size_t f = 0; f < free_ends.size(); ++f) {
                auto [p, i] = free_ends[f];
                auto [e, side] = ends[p][i];
                at[e][side] = pos[f];
            }
            HurwitzMobile M = base;
            for (size_t e = 0; e < edges.size(); ++e) {
                auto [u, v] = edges[e];
                MobileEdge E;
                E.a = {false, offset[u] + at[e][0]};
                E.b = {v >= m, offset[v] + at[e][1]};
                E.weight = weight[e];
                M.edges.push_back(E);
            }
            sink(M);
            ++count;
            size_t f = 0;
            while (f < free_ends.size() && ++pos[f] == size[free_ends[f].first])
                pos[f++] = 0;
            if (f == free_ends.size())
                break;
        }
    });
    return count;
}

std::set<std::string> enumerate_free_mobiles(const Partition& mu, const Partition& nu, std::uint64_t budget)
{
    check_mobile_budget(mobile_enumeration_cost(mu, nu, true), budget);
    std::set<std::string> codes;
    enumerate_face_labeled_mobiles(mu.parts(), nu.parts(), [&](const HurwitzMobile& M) {
        std::vector<int> labels(M.edges.size());
        for (size_t i = 0; i < labels.size(); ++i)
            labels[i] = static_cast<int>(i);
        HurwitzMobile L = M;
        do {
            for (size_t i = 0; i < labels.size(); ++i)
                L.edges[i].label = labels[i];
            codes.insert(canonical_code(L));
        } while (std::next_permutation(labels.begin(), labels.end()));
    }, std::numeric_limits<std::uint64_t>::max());
    return codes;
}

} // namespace hurwitz
