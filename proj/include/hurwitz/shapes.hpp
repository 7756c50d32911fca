#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

// Bipartite forest on white vertices 0..m-1 and black vertices 0..n-1.
// Edges are (white, black) pairs in lexicographic order.
struct BareShape {
    int m = 0, n = 0;
    std::vector<std::pair<int, int>> edges;

    struct Component {
        std::vector<int> whites, blacks, edges;
    };
    // Derived data, filled by finalize().
    std::vector<int> white_degree, black_degree;
    std::vector<Component> components;
    std::vector<int> component_of_white, component_of_black;
    // For edge j: the white and black vertices on the white side of j (s°_j).
    std::vector<std::vector<int>> side_whites, side_blacks;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_components() const { return static_cast<int>(components.size()); }
    bool has_isolated_vertex() const;
    void finalize();   // throws std::invalid_argument on a cycle or bad index
    std::string str() const;
    bool operator==(const BareShape& o) const { return m == o.m && n == o.n && edges == o.edges; }
};

// All forests, in lexicographic order of their edge lists. Without
// allow_isolated only shapes touching every vertex are returned.
std::vector<BareShape> enumerate_bare_shapes(int m, int n, bool allow_isolated);

struct RegionMembership {
    bool inside = false;
    std::vector<Integer> weights;   // ℓ_j from the white side
};
RegionMembership region_membership(const BareShape& s, const Composition& x, const Composition& y);

// R_s(x,y) without the region indicator.
Rational shape_contribution(const BareShape& s, const Composition& x, const Composition& y);

// Shapes with (x,y) in C(s), found directly as weighted forests (no full enumeration).
std::vector<BareShape> active_shapes(const Composition& x, const Composition& y);

Rational barh0_shapes(const Composition& x, const Composition& y);

struct ChamberPolynomial {
    Composition x, y;                        // the sample
    std::vector<int> sign_vector;            // one entry per resonance hyperplane, in hyperplane order
    std::vector<std::vector<int>> monomials; // one per shape: exponents (x_1..x_m, y_1..y_n), coefficient +1
    std::vector<BareShape> shapes;           // the contributing connected shapes

    Rational evaluate(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    std::string str() const;                 // "x1*y1 + x1*y2", like terms collected
};

// Hyperplanes Σ_{I} x = Σ_{J} y, I and J nonempty proper subsets, ordered by (I, J) bitmasks.
std::vector<std::pair<unsigned, unsigned>> resonance_hyperplanes(int m, int n);
std::vector<int> sign_vector(const Composition& x, const Composition& y);

// Throws std::invalid_argument("resonance point; use barh0_shapes") on a hyperplane.
ChamberPolynomial chamber_polynomial(const Composition& x, const Composition& y);

nlohmann::json to_json(const BareShape& s);
nlohmann::json to_json(const ChamberPolynomial& p);

} // namespace hurwitz
