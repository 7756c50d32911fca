#include "doctest.h"

#include "hurwitz/galaxy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace hurwitz;

static Factorization make_fact(int d, std::vector<std::vector<std::vector<int>>> taus, std::vector<std::vector<int>> sigma)
{
    Factorization f;
    f.degree = d;
    Permutation prod(d);
    for (auto& t : taus) {
        f.taus.push_back(Permutation::from_cycles(d, t));
        prod = prod * f.taus.back();
    }
    f.sigma = Permutation::from_cycles(d, sigma);
    f.rho = (prod * f.sigma).inverse();
    return f;
}

TEST_CASE("euler genus of small maps")
{
    CHECK(euler_genus(CombinatorialMap::from_rotation({1, 0})) == 0);
    auto torus = CombinatorialMap::from_rotation({2, 3, 1, 0});   // a b a' b'
    CHECK(torus.num_faces() == 1);
    CHECK(euler_genus(torus) == 1);
    // two isolated loops
    CHECK_THROWS(euler_genus(CombinatorialMap::from_rotation({1, 0, 3, 2})));
}

TEST_CASE("galaxies from small factorizations")
{
    auto G1 = galaxy_from_factorization(make_fact(1, {}, {}));
    CHECK(G1.map.num_vertices() == 1);
    CHECK(G1.map.num_edges() == 1);
    CHECK(G1.map.num_faces() == 2);
    auto t1 = validate_galaxy(G1);
    CHECK(t1.g == 0);

    auto G2 = galaxy_from_factorization(make_fact(2, {{{1, 2}}}, {}));
    CHECK(G2.map.num_vertices() == 3);
    CHECK(G2.map.num_edges() == 4);
    CHECK(G2.map.num_faces() == 3);
    auto t2 = validate_galaxy(G2);
    CHECK(t2.g == 0);
    CHECK(t2.mu == Partition({1, 1}));
    CHECK(t2.nu == Partition({2}));

    auto G3 = galaxy_from_factorization(make_fact(2, {{{1, 2}}, {{1, 2}}}, {{1, 2}}));
    auto t3 = validate_galaxy(G3);
    CHECK(t3.g == 1);
    CHECK(euler_genus(G3.map) == 1);
    CHECK(t3.mu == Partition({2}));
    CHECK(t3.nu == Partition({2}));
}

TEST_CASE("a galaxy of type (321, 2^2 1^2)")
{
    std::mt19937 rng(99);
    Partition mu({3, 2, 1}), nu({2, 2, 1, 1});
    auto sigmas = conjugacy_class(mu);
    bool found = false;
    for (int it = 0; it < 200000 && !found; ++it) {
        Factorization f;
        f.degree = 6;
        f.sigma = sigmas[rng() % sigmas.size()];
        Permutation prod(6);
        for (int i = 0; i < 5; ++i) {
            int a = rng() % 6, b = rng() % 5;
            if (b >= a)
                ++b;
            f.taus.push_back(Permutation::transposition(6, a, b));
            prod = prod * f.taus.back();
        }
        f.rho = (prod * f.sigma).inverse();
        std::vector<Permutation> gens = f.taus;
        gens.push_back(f.sigma);
        if (cycle_type(f.rho) != nu || !is_transitive(gens, 6))
            continue;
        auto t = validate_galaxy(galaxy_from_factorization(f));
        CHECK(t.mu == mu);
        CHECK(t.nu == nu);
        CHECK(t.g == 0);
        found = true;
    }
    CHECK(found);
}

TEST_CASE("validation rejects two half-degree-2 vertices of one color")
{
    // d = 4, r = 1, color 1 carries (1 2)(3 4) instead of a single transposition
    const int d = 4, r = 1;
    auto tail = [&](int c, int j) { return 2 * (c * d + j); };
    auto head = [&](int c, int j) { return 2 * (c * d + j) + 1; };
    std::vector<int> rot(2 * (r + 1) * d);
    auto cyc = [&](std::vector<int> v) {
        for (size_t i = 0; i < v.size(); ++i)
            rot[v[i]] = v[(i + 1) % v.size()];
    };
    for (int j = 0; j < d; ++j)
        cyc({head(1, (j + 1) % d), tail(0, j)});
    cyc({head(0, 0), tail(1, 0), head(0, 1), tail(1, 1)});
    cyc({head(0, 2), tail(1, 2), head(0, 3), tail(1, 3)});
    MarkedGalaxy G;
    G.map = CombinatorialMap::from_rotation(rot);
    G.d = d;
    G.r = r;
    G.vertex_color.assign(G.map.num_vertices(), 0);
    for (int j = 0; j < d; ++j)
        G.vertex_color[G.map.vertex_of(tail(1, j))] = 1;
    G.marked_vertex = G.map.vertex_of(tail(0, 0));
    CHECK_THROWS_WITH_AS(validate_galaxy(G), doctest::Contains("exactly d-1 vertices of each color"), GalaxyError);
}

// Exhaustive over the oracle stream for d <= 4, g <= 1.
TEST_CASE("galaxies from every factorization with d <= 4, g <= 1")
{
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (const auto& nu : partitions_of(d))
                for (int g = 0; g <= 1; ++g) {
                    CAPTURE(mu.str());
                    CAPTURE(nu.str());
                    CAPTURE(g);
                    std::set<std::vector<int>> codes;
                    int bad_type = 0, bad_delta = 0, bad_weights = 0, bad_indeg = 0;
                    std::uint64_t n = enumerate_factorizations(mu, nu, g, [&](const Factorization& f) {
                        auto G = galaxy_from_factorization(f);
                        auto t = validate_galaxy(G);
                        if (t.mu != mu || t.nu != nu || t.g != g)
                            ++bad_type;
                        auto L = distance_labeling(G);
                        const auto& M = G.map;
                        if (L.delta[G.marked_vertex] != 0)
                            ++bad_delta;
                        for (int v = 0; v < M.num_vertices(); ++v)
                            if (L.delta[v] % (G.r + 1) != G.vertex_color[v])
                                ++bad_delta;
                        for (int fi = 0; fi < M.num_faces(); ++fi) {
                            int s = 0;
                            for (int h : M.faces()[fi])
                                s += L.weight[h / 2];
                            if (s * (G.r + 1) != static_cast<int>(M.faces()[fi].size()))
                                ++bad_weights;
                        }
                        std::vector<int> indeg(M.num_vertices(), 0), geo_in(M.num_vertices(), 0);
                        for (int e = 0; e < M.num_edges(); ++e) {
                            ++indeg[G.head_vertex(e)];
                            if (L.weight[e] == 0)
                                ++geo_in[G.head_vertex(e)];
                        }
                        for (int v = 0; v < M.num_vertices(); ++v)
                            if (indeg[v] < 1 || indeg[v] > 2 || (v != G.marked_vertex && geo_in[v] < 1))
                                ++bad_indeg;
                        codes.insert(canonical_code(G));
                    });
                    CHECK(bad_type == 0);
                    CHECK(bad_delta == 0);
                    CHECK(bad_weights == 0);
                    CHECK(bad_indeg == 0);
                    Integer hb = Integer(std::to_string(n)) / factorial(d - 1);
                    CHECK(Integer(std::to_string(codes.size())) == hb);
                }
}

// Same marked galaxy iff conjugate by a permutation fixing sheet 1.
TEST_CASE("galaxy classes are the orbits of conjugation fixing 1")
{
    for (const auto& [mu, nu, g] : std::vector<std::tuple<Partition, Partition, int>>{
             {Partition({2, 1}), Partition({2, 1}), 0},
             {Partition({1, 1, 1}), Partition({3}), 0},
             {Partition({2, 2}), Partition({3, 1}), 0},
             {Partition({2, 1, 1}), Partition({2, 2}), 1}}) {
        int d = mu.size();
        std::map<std::vector<int>, int> class_size;
        std::vector<Factorization> all;
        enumerate_factorizations(mu, nu, g, [&](const Factorization& f) {
            ++class_size[canonical_code(galaxy_from_factorization(f))];
            all.push_back(f);
        });
        for (const auto& [code, sz] : class_size)
            CHECK(Integer(sz) == factorial(d - 1));
        // conjugating a representative by every permutation fixing 1 stays in its class
        const auto& f = all.front();
        auto code = canonical_code(galaxy_from_factorization(f));
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        do {
            if (img[0] != 0)
                continue;
            Permutation c(img), ci = c.inverse();
            Factorization h;
            h.degree = d;
            for (const auto& t : f.taus)
                h.taus.push_back(ci * t * c);
            h.sigma = ci * f.sigma * c;
            h.rho = ci * f.rho * c;
            CHECK(canonical_code(galaxy_from_factorization(h)) == code);
        } while (std::next_permutation(img.begin(), img.end()));
    }
}

TEST_CASE("galaxy JSON has the stable keys")
{
    auto G = galaxy_from_factorization(make_fact(2, {{{1, 2}}}, {}));
    auto j = to_json(G);
    for (const char* k : {"darts", "alpha", "rotation_cycles", "face_colors", "vertex_colors", "marked_vertex"})
        CHECK(j.contains(k));
    CHECK(j.dump() == to_json(galaxy_from_factorization(make_fact(2, {{{1, 2}}}, {}))).dump());
}
