#include "hurwitz/galaxy.hpp"

#include <deque>
#include <set>
#include <string>

namespace hurwitz {

const char* to_string(FaceColor c)
{
    switch (c) {
    case FaceColor::White:
        return "white";
    case FaceColor::Black:
        return "black";
    default:
        return "hole";
    }
}

MarkedGalaxy galaxy_from_factorization(const Factorization& f)
{
    validate_factorization(f);
    const int d = f.degree, r = f.r();
    auto edge = [&](int c, int j) { return c * d + j; };
    auto tail = [&](int c, int j) { return 2 * edge(c, j); };
    auto head = [&](int c, int j) { return 2 * edge(c, j) + 1; };
    std::vector<int> rot(2 * (r + 1) * d, -1);
    auto cycle = [&](std::initializer_list<int> darts) {
        std::vector<int> v(darts);
        for (size_t i = 0; i < v.size(); ++i)
            rot[v[i]] = v[(i + 1) % v.size()];
    };

    // color 0: sheet j receives the closing edge of sheet σ^{-1}(j)
    Permutation sinv = f.sigma.inverse();
    for (int j = 0; j < d; ++j)
        cycle({head(r, sinv(j)), tail(0, j)});
    for (int c = 1; c <= r; ++c) {
        const Permutation& t = f.taus[c - 1];
        int a = -1, b = -1;
        for (int j = 0; j < d; ++j)
            if (t(j) != j) {
                (a < 0 ? a : b) = j;
            }
        for (int j = 0; j < d; ++j)
            if (t(j) == j)
                cycle({head(c - 1, j), tail(c, j)});
        cycle({head(c - 1, a), tail(c, a), head(c - 1, b), tail(c, b)});
    }

    MarkedGalaxy G;
    G.map = CombinatorialMap::from_rotation(rot);
    G.d = d;
    G.r = r;
    G.vertex_color.assign(G.map.num_vertices(), -1);
    for (int c = 0; c <= r; ++c)
        for (int j = 0; j < d; ++j) {
            G.vertex_color[G.map.vertex_of(tail(c, j))] = c;
            G.vertex_color[G.map.vertex_of(head(c, j))] = (c + 1) % (r + 1);
        }
    G.marked_vertex = G.map.vertex_of(tail(0, 0));
    try {
        validate_galaxy(G);
    } catch (const GalaxyError& e) {
        throw std::logic_error(std::string("construction convention violated: ") + e.what());
    }
    return G;
}

GalaxyType validate_galaxy(const MarkedGalaxy& G)
{
    const auto& M = G.map;
    const int d = G.d, r = G.r, E = M.num_edges();
    auto fail = [](const std::string& what) { throw GalaxyError("galaxy invariant violated: " + what); };

    if (d < 1 || r < 0)
        fail("parameters d >= 1, r >= 0");
    if (E != (r + 1) * d)
        fail("edge count (r+1)d");
    for (int h = 0; h < M.num_darts(); ++h)
        if (M.alpha(h) != (h ^ 1))
            fail("dart pairing 2k, 2k+1");
    if (!M.is_connected())
        fail("connected");
    if (static_cast<int>(G.vertex_color.size()) != M.num_vertices())
        fail("vertex colors present");
    for (int c : G.vertex_color)
        if (c < 0 || c > r)
            fail("vertex colors in 0..r");
    if (G.marked_vertex < 0 || G.marked_vertex >= M.num_vertices() || G.vertex_color[G.marked_vertex] != 0)
        fail("marked vertex has color 0");

    std::vector<int> out_from_color(r + 1, 0);
    for (int e = 0; e < E; ++e) {
        int ct = G.vertex_color[G.tail_vertex(e)], ch = G.vertex_color[G.head_vertex(e)];
        if (ch != (ct + 1) % (r + 1))
            fail("edges go from color i to i+1 mod r+1");
        ++out_from_color[ct];
    }
    for (int c = 0; c <= r; ++c)
        if (out_from_color[c] != d)
            fail("d edges originate from each color");

    for (const auto& f : M.faces()) {
        for (int h : f)
            if (h % 2 != f[0] % 2)
                fail("black face on the left of every edge (face bicoloring)");
        if (f.size() % (r + 1))
            fail("face degrees are multiples of r+1");
    }

    std::vector<int> count(r + 1, 0), twos(r + 1, 0);
    for (int v = 0; v < M.num_vertices(); ++v) {
        const auto& rot = M.vertices()[v];
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] % 2 == rot[(i + 1) % rot.size()] % 2)
                fail("in and out darts alternate around vertices");
        int half = static_cast<int>(rot.size()) / 2;
        if (half < 1 || half > 2)
            fail("half-degrees are 1 or 2");
        int c = G.vertex_color[v];
        ++count[c];
        if (half == 2)
            ++twos[c];
    }
    if (count[0] != d || twos[0] != 0)
        fail("d vertices of color 0, all of half-degree 1");
    for (int c = 1; c <= r; ++c)
        if (count[c] != d - 1 || twos[c] != 1)
            fail("exactly d-1 vertices of each color, one of half-degree 2");

    std::vector<int> white, black;
    for (int fi = 0; fi < M.num_faces(); ++fi) {
        int deg = static_cast<int>(M.faces()[fi].size()) / (r + 1);
        (G.face_color(fi) == FaceColor::White ? white : black).push_back(deg);
    }
    GalaxyType t;
    t.mu = Partition(white);
    t.nu = Partition(black);
    t.d = d;
    t.r = r;
    t.g = euler_genus(M);
    if (t.mu.size() != d || t.nu.size() != d)
        fail("face degrees sum to (r+1)d per color");
    if (r != t.mu.length() + t.nu.length() - 2 + 2 * t.g)
        fail("r = m + n - 2 + 2g");
    return t;
}

DistanceLabeling distance_labeling(const MarkedGalaxy& G)
{
    const auto& M = G.map;
    DistanceLabeling L;
    L.delta.assign(M.num_vertices(), -1);
    L.delta[G.marked_vertex] = 0;
    std::deque<int> queue{G.marked_vertex};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int h : M.vertices()[v]) {
            if (h % 2)
                continue;
            int w = M.vertex_of(h + 1);
            if (L.delta[w] < 0) {
                L.delta[w] = L.delta[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for (int x : L.delta)
        if (x < 0)
            throw GalaxyError("distance labeling: unreachable vertex");
    L.weight.resize(M.num_edges());
    for (int e = 0; e < M.num_edges(); ++e) {
        int num = L.delta[G.tail_vertex(e)] + 1 - L.delta[G.head_vertex(e)];
        if (num < 0 || num % (G.r + 1))
            throw GalaxyError("distance labeling: edge weight is not a nonnegative integer");
        L.weight[e] = num / (G.r + 1);
    }
    return L;
}

std::vector<int> canonical_code(const MarkedGalaxy& G)
{
    const auto& M = G.map;
    int root = -1;
    for (int h : M.vertices()[G.marked_vertex])
        if (h % 2 == 0) {
            if (root >= 0)
                throw GalaxyError("marked vertex must have a single outgoing edge");
            root = h;
        }
    std::vector<int> id(M.num_darts(), -1), order;
    id[root] = 0;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i) {
        int h = order[i];
        for (int nb : {M.alpha(h), M.rotation(h)})
            if (id[nb] < 0) {
                id[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
    }
    std::vector<int> code{G.d, G.r, M.num_darts()};
    for (int h : order) {
        code.push_back(id[M.alpha(h)]);
        code.push_back(id[M.rotation(h)]);
        code.push_back(h % 2);
    }
    return code;
}

nlohmann::json to_json(const MarkedGalaxy& G)
{
    nlohmann::json j = G.map.to_json();
    std::vector<std::string> fc;
    for (int f = 0; f < G.map.num_faces(); ++f)
        fc.push_back(to_string(G.face_color(f)));
    j["face_colors"] = fc;
    j["vertex_colors"] = G.vertex_color;
    j["marked_vertex"] = G.marked_vertex;
    j["d"] = G.d;
    j["r"] = G.r;
    return j;
}

std::vector<MarkedGalaxy> galaxy_classes(const Partition& mu, const Partition& nu, int g, std::uint64_t budget)
{
    std::set<std::vector<int>> seen;
    std::vector<MarkedGalaxy> out;
    enumerate_factorizations(
        mu, nu, g,
        [&](const Factorization& f) {
            auto G = galaxy_from_factorization(f);
            if (seen.insert(canonical_code(G)).second)
                out.push_back(G);
        },
        budget);
    return out;
}

} // namespace hurwitz
