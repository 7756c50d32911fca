#pragma once

#include "hurwitz/galaxy.hpp"
#include "hurwitz/mobile.hpp"

#include <json.hpp>

#include <vector>

namespace hurwitz {

// Plane tree of geodesic edges; a vertex with two geodesic incoming edges is split
// in two pieces {in_a, rotation^{-1}(in_a)} and {in_b, rotation^{-1}(in_b)}.
struct SplitTree {
    struct Node {
        int galaxy_vertex = -1;
        int color = 0;
        int delta = 0;
        int parent = -1;
        int in_dart = -1;                 // galaxy head dart of the edge from the parent
        std::vector<int> darts;           // galaxy darts owned by this piece, in rotation order
        std::vector<int> children;        // counterclockwise after the parent dart
    };
    std::vector<Node> nodes;              // nodes[0] is the root x_0

    int num_edges() const { return static_cast<int>(nodes.size()) - 1; }
    // δ at the 2E corners met by the contour walk from the root.
    std::vector<int> contour() const;
};

SplitTree theta_tree(const MarkedGalaxy& G, const DistanceLabeling& L);

enum class EdgeKind { Internal, WhiteBoundary, BlackBoundary };

// Closed map in which the boundary is one distinguished face (the hole). Edge k is
// oriented from dart 2k to 2k+1; white boundary edges have the hole on their left,
// black boundary edges on their right.
struct BoundaryCactus {
    CombinatorialMap map;
    std::vector<EdgeKind> kind;            // per edge
    std::vector<int> vertex_color;         // per map vertex
    int d = 0;
    int r = 0;
    std::vector<int> galaxy_edge;          // provenance when cut from a galaxy, else empty

    bool on_hole(int h) const
    {
        EdgeKind k = kind[h / 2];
        return (k == EdgeKind::WhiteBoundary && h % 2 == 0) || (k == EdgeKind::BlackBoundary && h % 2 == 1);
    }
    int hole_face() const;                 // throws unless exactly one
    FaceColor face_color(int f) const;
};

struct CactusType {
    Partition mu, nu;
    int g = 0;
};

class CactusError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

CactusType validate_cactus(const BoundaryCactus& C);

BoundaryCactus gamma_cut(const MarkedGalaxy& G, const DistanceLabeling& L);

struct CornerLabeling {
    std::vector<int> hole_darts;   // the hole face, in face order; corner i sits at the vertex of hole_darts[i]
    std::vector<int> labels;
    bool coherent = false;
    bool proper = false;
    std::vector<int> vertex_label; // per vertex, valid when coherent (-1 elsewhere)
};

// start rotates the walk; the result does not depend on it.
CornerLabeling canonical_corner_labeling(const BoundaryCactus& C, int start = 0);

BoundaryCactus shift_cactus(const BoundaryCactus& C, int k = 1);

MarkedGalaxy glue(const BoundaryCactus& C);
HurwitzMobile retract_pi(const BoundaryCactus& C);
BoundaryCactus expand_pi_inverse(const HurwitzMobile& M);

// Coherent: Π^{-1}(M) has coherent corner labels and retracts back to M. In genus
// g >= 1 the cactus does not remember weights, so the second check is needed.
enum class MobileClass { Coherent, Incoherent, WeightMismatch, Degenerate };
MobileClass classify_mobile(const HurwitzMobile& M);
std::string to_string(MobileClass c);

HurwitzMobile phi(const MarkedGalaxy& G);
MarkedGalaxy phi_inverse(const HurwitzMobile& M);

nlohmann::json to_json(const SplitTree& T);
nlohmann::json to_json(const BoundaryCactus& C);
nlohmann::json trace_json(const MarkedGalaxy& G);

} // namespace hurwitz
