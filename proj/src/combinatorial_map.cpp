#include "hurwitz/combinatorial_map.hpp"

#include <stdexcept>

namespace hurwitz {

static std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm, std::vector<int>& index)
{
    std::vector<std::vector<int>> out;
    index.assign(perm.size(), -1);
    for (size_t s = 0; s < perm.size(); ++s) {
        if (index[s] >= 0)
            continue;
        std::vector<int> c;
        for (int x = static_cast<int>(s); index[x] < 0; x = perm[x]) {
            index[x] = static_cast<int>(out.size());
            c.push_back(x);
        }
        out.push_back(c);
    }
    return out;
}

CombinatorialMap::CombinatorialMap(std::vector<int> alpha, std::vector<int> rotation)
    : alpha_(std::move(alpha)), rot_(std::move(rotation))
{
    int n = num_darts();
    if (static_cast<int>(rot_.size()) != n || n % 2)
        throw std::invalid_argument("map: dart count mismatch");
    rot_inv_.assign(n, -1);
    for (int h = 0; h < n; ++h) {
        int a = alpha_[h];
        if (a < 0 || a >= n || a == h || alpha_[a] != h)
            throw std::invalid_argument("map: alpha is not a fixed-point-free involution");
        int r = rot_[h];
        if (r < 0 || r >= n || rot_inv_[r] >= 0)
            throw std::invalid_argument("map: rotation is not a permutation");
        rot_inv_[r] = h;
    }
    vertices_ = cycles_of(rot_, vertex_of_);
    std::vector<int> phi(n);
    for (int h = 0; h < n; ++h)
        phi[h] = rot_inv_[alpha_[h]];
    faces_ = cycles_of(phi, face_of_);
}

CombinatorialMap CombinatorialMap::from_rotation(std::vector<int> rotation)
{
    std::vector<int> alpha(rotation.size());
    for (size_t h = 0; h < alpha.size(); ++h)
        alpha[h] = static_cast<int>(h ^ 1);
    return CombinatorialMap(alpha, std::move(rotation));
}

bool CombinatorialMap::is_connected() const
{
    int n = num_darts();
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int nb : {alpha_[h], rot_[h]})
            if (!seen[nb]) {
                seen[nb] = 1;
                ++count;
                stack.push_back(nb);
            }
    }
    return count == n;
}

nlohmann::json CombinatorialMap::to_json() const
{
    return {{"darts", num_darts()}, {"alpha", alpha_}, {"rotation_cycles", vertices_}};
}

int euler_genus(const CombinatorialMap& m)
{
    if (!m.is_connected())
        throw std::invalid_argument("euler_genus: map is disconnected");
    int defect = 2 - m.euler_characteristic();
    if (defect < 0 || defect % 2)
        throw std::invalid_argument("euler_genus: odd or negative Euler defect");
    return defect / 2;
}

} // namespace hurwitz
