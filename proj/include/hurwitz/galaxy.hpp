#pragma once

#include "hurwitz/combinatorial_map.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace hurwitz {

enum class FaceColor { White, Black, Hole };
const char* to_string(FaceColor c);

// Edge k is oriented from the vertex of dart 2k (tail) to that of 2k+1 (head),
// so black faces are traversed along the orientation and white faces against it.
struct MarkedGalaxy {
    CombinatorialMap map;
    std::vector<int> vertex_color;        // indexed by map vertex
    int marked_vertex = 0;
    int d = 0;
    int r = 0;

    FaceColor face_color(int f) const { return map.faces()[f][0] % 2 == 0 ? FaceColor::Black : FaceColor::White; }
    int tail_vertex(int e) const { return map.vertex_of(2 * e); }
    int head_vertex(int e) const { return map.vertex_of(2 * e + 1); }
};

struct GalaxyType {
    Partition mu, nu;
    int g = 0, d = 0, r = 0;
};

class GalaxyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

MarkedGalaxy galaxy_from_factorization(const Factorization& f);
GalaxyType validate_galaxy(const MarkedGalaxy& G);

struct DistanceLabeling {
    std::vector<int> delta;    // per vertex
    std::vector<int> weight;   // per edge
};

DistanceLabeling distance_labeling(const MarkedGalaxy& G);

// Isomorphism invariant of marked galaxies: breadth-first relabeling of darts from
// the unique out-dart of the marked vertex.
std::vector<int> canonical_code(const MarkedGalaxy& G);

nlohmann::json to_json(const MarkedGalaxy& G);

// One galaxy per isomorphism class, from the factorization stream.
std::vector<MarkedGalaxy> galaxy_classes(const Partition& mu, const Partition& nu, int g,
                                         std::uint64_t budget = default_budget());

} // namespace hurwitz
