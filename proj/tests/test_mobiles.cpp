#include "doctest.h"

#include "hurwitz/mobile.hpp"
#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

using namespace hurwitz;

static const std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

static HurwitzMobile two_two()
{
    HurwitzMobile M;
    M.white_polygons = {{0, 1}};
    M.black_polygons = {{0, 1}};
    M.edges = {{{false, 0}, {true, 0}, 2, 0}};
    return M;
}

// All edge-labeled mobiles obtained by labeling the face-labeled ones.
static std::vector<HurwitzMobile> labeled_mobiles(const Partition& mu, const Partition& nu)
{
    std::vector<HurwitzMobile> out;
    enumerate_face_labeled_mobiles(mu.parts(), nu.parts(), [&](const HurwitzMobile& M) {
        std::vector<int> labels(M.edges.size());
        for (size_t i = 0; i < labels.size(); ++i)
            labels[i] = static_cast<int>(i);
        do {
            HurwitzMobile L = M;
            for (size_t i = 0; i < labels.size(); ++i)
                L.edges[i].label = labels[i];
            out.push_back(L);
        } while (std::next_permutation(labels.begin(), labels.end()));
    }, unlimited);
    return out;
}

TEST_CASE("validation")
{
    auto t = validate_mobile(two_two());
    CHECK(t.mu == Partition({2}));
    CHECK(t.nu == Partition({2}));
    CHECK(t.excess == 0);

    HurwitzMobile bad = two_two();
    bad.white_polygons = {{0}, {1}};
    bad.edges = {{{false, 0}, {true, 0}, 1, 0}, {{false, 1}, {true, 1}, 0, 1}};
    CHECK_THROWS_WITH_AS(validate_mobile(bad), doctest::Contains("zero-weight"), MobileError);

    HurwitzMobile w = two_two();
    w.edges[0].weight = 1;
    CHECK_THROWS_WITH_AS(validate_mobile(w), doctest::Contains("sum to i"), MobileError);

    HurwitzMobile lab = two_two();
    lab.edges[0].label = 3;
    CHECK_THROWS_WITH_AS(validate_mobile(lab), doctest::Contains("labels"), MobileError);
}

TEST_CASE("a free mobile of type (321, 2^2 1^2)")
{
    int seen = 0;
    enumerate_face_labeled_mobiles({3, 2, 1}, {2, 2, 1, 1}, [&](const HurwitzMobile& M) {
        if (seen++)
            return;
        HurwitzMobile L = M;
        for (size_t i = 0; i < L.edges.size(); ++i)
            L.edges[i].label = static_cast<int>(i);
        auto t = validate_mobile(L);
        CHECK(t.mu == Partition({3, 2, 1}));
        CHECK(t.nu == Partition({2, 2, 1, 1}));
        CHECK(t.excess == 0);
    }, unlimited);
    CHECK(seen > 0);
}

TEST_CASE("canonical embedding of free mobiles")
{
    HurwitzMobile M;
    M.white_polygons = {{0}};
    M.black_polygons = {{0}};
    M.edges = {{{false, 0}, {true, 0}, 1, 0}};
    auto e = canonical_embedding(M);
    CHECK(e.genus == 0);
    CHECK(e.non_polygon_faces == 1);

    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (const auto& nu : partitions_of(d)) {
                int bad = 0;
                enumerate_face_labeled_mobiles(mu.parts(), nu.parts(), [&](const HurwitzMobile& F) {
                    auto emb = canonical_embedding(F);
                    if (emb.genus != 0 || emb.non_polygon_faces != 1)
                        ++bad;
                }, unlimited);
                CHECK(bad == 0);
            }
}

TEST_CASE("shift classes")
{
    HurwitzMobile r0 = two_two();
    CHECK(canonical_code(shift_mobile(r0)) == canonical_code(r0));

    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (const auto& nu : partitions_of(d)) {
                if (mu.length() + nu.length() > 6)
                    continue;
                int bad_period = 0, bad_class = 0, bad_genus = 0, same_as_shift = 0;
                for (const auto& M : labeled_mobiles(mu, nu)) {
                    int r = M.r();
                    std::set<std::string> cls;
                    HurwitzMobile S = M;
                    int g0 = canonical_embedding(M).genus;
                    for (int k = 0; k <= r; ++k) {
                        cls.insert(canonical_code(S));
                        S = shift_mobile(S);
                        validate_mobile(S);
                        if (d <= 3 && canonical_embedding(S).genus != g0)
                            ++bad_genus;
                    }
                    if (canonical_code(S) != canonical_code(M))
                        ++bad_period;
                    if (static_cast<int>(cls.size()) != r + 1)
                        ++bad_class;
                    if (r >= 1 && canonical_code(shift_mobile(M)) == canonical_code(M))
                        ++same_as_shift;
                }
                CAPTURE(mu.str());
                CAPTURE(nu.str());
                CHECK(bad_period == 0);
                CHECK(bad_class == 0);
                CHECK(bad_genus == 0);
                CHECK(same_as_shift == 0);
            }
}

TEST_CASE("canonical code ignores listing order")
{
    auto all = labeled_mobiles(Partition({2, 1}), Partition({1, 1, 1}));
    std::mt19937 rng(5);
    for (size_t i = 0; i < all.size(); i += 7) {
        HurwitzMobile M = all[i];
        // renumber nodes and reorder polygons
        std::vector<int> pw(3), pb(3);
        std::iota(pw.begin(), pw.end(), 0);
        std::iota(pb.begin(), pb.end(), 0);
        std::shuffle(pw.begin(), pw.end(), rng);
        std::shuffle(pb.begin(), pb.end(), rng);
        HurwitzMobile N = M;
        for (auto& p : N.white_polygons)
            for (int& x : p)
                x = pw[x];
        for (auto& p : N.black_polygons)
            for (int& x : p)
                x = pb[x];
        for (auto& e : N.edges) {
            e.a.node = pw[e.a.node];
            e.b.node = e.b.black ? pb[e.b.node] : pw[e.b.node];
        }
        std::reverse(N.white_polygons.begin(), N.white_polygons.end());
        std::shuffle(N.black_polygons.begin(), N.black_polygons.end(), rng);
        std::shuffle(N.edges.begin(), N.edges.end(), rng);
        // rotate a polygon's listing
        std::rotate(N.white_polygons.back().begin(), N.white_polygons.back().begin() + 1, N.white_polygons.back().end());
        CHECK(canonical_code(N) == canonical_code(M));
    }
}

TEST_CASE("free mobile counts")
{
    CHECK(enumerate_free_mobiles(Partition({2}), Partition({2}), unlimited).size() == 1);
    CHECK(enumerate_free_mobiles(Partition({3}), Partition({1, 1, 1}), unlimited).size() == 9);
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (const auto& nu : partitions_of(d)) {
                CAPTURE(mu.str());
                CAPTURE(nu.str());
                int m = mu.length(), n = nu.length();
                Integer hb = count_labeled_factorizations(mu, nu, 0) / factorial(d - 1);
                auto codes = enumerate_free_mobiles(mu, nu, unlimited);
                Integer hm(std::to_string(codes.size()));
                CHECK(hm == (m + n - 1) * hb);
                Integer fl = count_face_labeled_mobiles(mu.parts(), nu.parts(), unlimited);
                CHECK(aut(mu) * aut(nu) * hm == factorial(m + n - 1) * fl);
                std::set<std::string> flcodes;
                std::uint64_t emitted = enumerate_face_labeled_mobiles(mu.parts(), nu.parts(), [&](const HurwitzMobile& M) {
                    flcodes.insert(face_labeled_code(M));
                }, unlimited);
                CHECK(Integer(std::to_string(emitted)) == fl);
                CHECK(flcodes.size() == emitted);
            }
}

TEST_CASE("mobile JSON round trip")
{
    auto all = labeled_mobiles(Partition({2, 1}), Partition({2, 1}));
    auto j = to_json(all.front());
    for (const char* k : {"white_polygons", "black_polygons", "edges", "excess"})
        CHECK(j.contains(k));
    CHECK(canonical_code(mobile_from_json(j)) == canonical_code(all.front()));
}

TEST_CASE("enumeration budget")
{
    CHECK_THROWS(enumerate_free_mobiles(Partition({1, 1, 1, 1}), Partition({1, 1, 1, 1}), 1000));
}
