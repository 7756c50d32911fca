#pragma once

#include "hurwitz/combinatorial_map.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

struct NodeRef {
    bool black = false;
    int node = 0;
    bool operator==(const NodeRef&) const = default;
};

// Positive edges run from a white node (a) to a black node (b); zero-weight
// edges join two white nodes. label < 0 means unlabeled (face-labeled mobiles).
struct MobileEdge {
    NodeRef a, b;
    int weight = 0;
    int label = -1;
};

// Nodes of each color are numbered 0..d-1; a polygon lists its nodes in
// orientation order (clockwise for white, counterclockwise for black).
struct HurwitzMobile {
    std::vector<std::vector<int>> white_polygons, black_polygons;
    std::vector<MobileEdge> edges;
    int excess = 0;

    int r() const { return static_cast<int>(white_polygons.size() + black_polygons.size()) - 2 + excess; }
};

struct MobileType {
    Partition mu, nu;
    int excess = 0;
    int d = 0;
    int r = 0;
};

class MobileError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

MobileType validate_mobile(const HurwitzMobile& M, bool labeled = true);

// Where each node sits: polygon index and position inside it.
struct NodeSlot {
    int polygon = -1;
    int position = -1;
};
std::vector<NodeSlot> node_slots(const std::vector<std::vector<int>>& polygons, int d);

struct MobileEmbedding {
    CombinatorialMap map;      // vertices: white nodes 0..d-1, black nodes d..2d-1
    int genus = 0;
    int non_polygon_faces = 0;
};

// Rotation at a node: the incoming arc, the incident edges by increasing label,
// then the outgoing arc, read counterclockwise on black nodes and clockwise on
// white nodes.
MobileEmbedding canonical_embedding(const HurwitzMobile& M);

HurwitzMobile shift_mobile(const HurwitzMobile& M);

std::string canonical_code(const HurwitzMobile& M);
// For face-labeled mobiles without cycles of edges (genus 0).
std::string face_labeled_code(const HurwitzMobile& M);

nlohmann::json to_json(const HurwitzMobile& M);
HurwitzMobile mobile_from_json(const nlohmann::json& j);

// Free (excess 0) face-labeled mobiles: white polygon i has x[i] nodes, black j has y[j].
// Polygons are numbered in the order of x and y. Returns the number emitted.
std::uint64_t enumerate_face_labeled_mobiles(const Composition& x, const Composition& y,
                                             const std::function<void(const HurwitzMobile&)>& sink,
                                             std::uint64_t budget);
Integer count_face_labeled_mobiles(const Composition& x, const Composition& y, std::uint64_t budget);

// Edge-labeled free mobiles of type (μ,ν), built by labeling every face-labeled
// mobile in all (r+1)! ways and deduplicating by canonical code.
std::set<std::string> enumerate_free_mobiles(const Partition& mu, const Partition& nu, std::uint64_t budget);

// Work estimate for the two enumerators (trees times labelings for the direct one).
std::uint64_t mobile_enumeration_cost(const Partition& mu, const Partition& nu, bool edge_labeled);

} // namespace hurwitz
