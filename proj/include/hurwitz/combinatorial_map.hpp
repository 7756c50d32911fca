#pragma once

#include <json.hpp>

#include <vector>

namespace hurwitz {

// Rotation system on darts 0..2E-1. Edge k owns darts 2k and 2k+1.
// rotation(h) is the next dart counterclockwise around the vertex of h; faces are
// the cycles of h -> rotation^{-1}(alpha(h)), which keeps the face on the left.
class CombinatorialMap {
public:
    CombinatorialMap() = default;
    CombinatorialMap(std::vector<int> alpha, std::vector<int> rotation);
    // alpha(2k) = 2k+1 implied
    static CombinatorialMap from_rotation(std::vector<int> rotation);

    int num_darts() const { return static_cast<int>(alpha_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int alpha(int h) const { return alpha_[h]; }
    int rotation(int h) const { return rot_[h]; }
    int rotation_inv(int h) const { return rot_inv_[h]; }
    int face_step(int h) const { return rot_inv_[alpha_[h]]; }

    const std::vector<int>& alpha() const { return alpha_; }
    const std::vector<int>& rotation() const { return rot_; }

    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int vertex_of(int h) const { return vertex_of_[h]; }
    int face_of(int h) const { return face_of_[h]; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    bool is_connected() const;
    int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }

    nlohmann::json to_json() const;

private:
    std::vector<int> alpha_, rot_, rot_inv_;
    std::vector<std::vector<int>> vertices_, faces_;
    std::vector<int> vertex_of_, face_of_;
};

// (2 - V + E - F)/2; throws on a disconnected map or an odd defect.
int euler_genus(const CombinatorialMap& m);

} // namespace hurwitz
