#include "hurwitz/bijection.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace hurwitz {

// ---------------------------------------------------------------- Θ(G)

std::vector<int> SplitTree::contour() const
{
    std::vector<int> out;
    std::vector<std::pair<int, size_t>> stack{{0, 0}};
    out.push_back(nodes[0].delta);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < nodes[v].children.size()) {
            int c = nodes[v].children[i++];
            out.push_back(nodes[c].delta);
            stack.push_back({c, 0});
        } else {
            stack.pop_back();
            if (!stack.empty())
                out.push_back(nodes[stack.back().first].delta);
        }
    }
    out.pop_back();
    return out;
}

namespace {

std::vector<int> geodesic_in_darts(const MarkedGalaxy& G, const DistanceLabeling& L, int v)
{
    std::vector<int> in;
    for (int h : G.map.vertices()[v])
        if (h % 2 == 1 && L.weight[h / 2] == 0)
            in.push_back(h);
    return in;
}

} // namespace

SplitTree theta_tree(const MarkedGalaxy& G, const DistanceLabeling& L)
{
    const auto& M = G.map;
    std::vector<std::vector<int>> pieces;
    std::vector<int> piece_of(M.num_darts(), -1), piece_vertex;
    for (int v = 0; v < M.num_vertices(); ++v) {
        auto in = geodesic_in_darts(G, L, v);
        if (in.empty() != (v == G.marked_vertex) || in.size() > 2)
            throw GalaxyError("theta: every vertex but x_0 needs one or two geodesic incoming edges");
        if (in.size() == 2) {
            for (int h : in) {
                pieces.push_back({h, M.rotation_inv(h)});
                piece_vertex.push_back(v);
            }
        } else {
            pieces.push_back(M.vertices()[v]);
            piece_vertex.push_back(v);
        }
    }
    for (size_t p = 0; p < pieces.size(); ++p)
        for (int h : pieces[p])
            piece_of[h] = static_cast<int>(p);
    for (int h = 0; h < M.num_darts(); ++h)
        if (piece_of[h] < 0)
            throw GalaxyError("theta: split vertex with darts outside both pieces");

    SplitTree T;
    std::vector<int> node_of_piece(pieces.size(), -1);
    int root_piece = -1;
    for (size_t p = 0; p < pieces.size(); ++p)
        if (piece_vertex[p] == G.marked_vertex)
            root_piece = static_cast<int>(p);
    node_of_piece[root_piece] = 0;
    T.nodes.push_back({});
    std::vector<int> todo{root_piece};
    while (!todo.empty()) {
        int p = todo.back();
        todo.pop_back();
        int id = node_of_piece[p];
        auto& node = T.nodes[id];
        int v = piece_vertex[p];
        node.galaxy_vertex = v;
        node.color = G.vertex_color[v];
        node.delta = L.delta[v];
        // order the piece's darts counterclockwise starting after the parent dart
        std::vector<int> ds;
        const auto& rot = M.vertices()[v];
        int start = node.in_dart >= 0 ? node.in_dart : rot[0];
        for (int h = M.rotation(start);; h = M.rotation(h)) {
            if (piece_of[h] == p)
                ds.push_back(h);
            if (h == start)
                break;
        }
        node.darts = ds;
        std::vector<int> kids;
        for (int h : ds) {
            if (h % 2 || L.weight[h / 2] != 0)
                continue;
            int cp = piece_of[h + 1];
            if (node_of_piece[cp] >= 0)
                throw GalaxyError("theta: geodesic edges contain a cycle");
            int cid = static_cast<int>(T.nodes.size());
            node_of_piece[cp] = cid;
            SplitTree::Node child;
            child.parent = id;
            child.in_dart = h + 1;
            T.nodes.push_back(child);
            kids.push_back(cid);
        }
        T.nodes[id].children = kids;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            for (size_t q = 0; q < pieces.size(); ++q)
                if (node_of_piece[q] == *it)
                    todo.push_back(static_cast<int>(q));
    }
    if (T.nodes.size() != pieces.size())
        throw GalaxyError("theta: geodesic edges do not span the pieces");
    for (size_t i = 1; i < T.nodes.size(); ++i)
        if (T.nodes[i].delta != T.nodes[T.nodes[i].parent].delta + 1)
            throw GalaxyError("theta: delta is not the tree distance");
    return T;
}

// ---------------------------------------------------------------- cacti

int BoundaryCactus::hole_face() const
{
    int hole = -1;
    bool any_boundary = false;
    for (EdgeKind k : kind)
        if (k != EdgeKind::Internal)
            any_boundary = true;
    for (int f = 0; f < map.num_faces(); ++f) {
        const auto& face = map.faces()[f];
        bool h0 = on_hole(face[0]);
        for (int h : face)
            if (on_hole(h) != h0)
                throw CactusError("cactus invariant violated: a face mixes boundary and interior sides");
        if (h0) {
            if (hole >= 0)
                throw CactusError("cactus invariant violated: more than one boundary face (degenerate excess)");
            hole = f;
        }
    }
    if (any_boundary && hole < 0)
        throw CactusError("cactus invariant violated: no boundary face");
    return hole;
}

FaceColor BoundaryCactus::face_color(int f) const
{
    int h = map.faces()[f][0];
    if (on_hole(h))
        return FaceColor::Hole;
    return h % 2 == 0 ? FaceColor::Black : FaceColor::White;
}

CactusType validate_cactus(const BoundaryCactus& C)
{
    const auto& M = C.map;
    auto fail = [](const std::string& what) { throw CactusError("cactus invariant violated: " + what); };
    if (static_cast<int>(C.kind.size()) != M.num_edges())
        fail("edge kinds present");
    if (!M.is_connected())
        fail("connected");
    int hole = C.hole_face();
    int nw = 0, nb = 0;
    for (EdgeKind k : C.kind)
        nw += k == EdgeKind::WhiteBoundary, nb += k == EdgeKind::BlackBoundary;
    if (nw != nb)
        fail("as many white as black boundary edges");
    for (int e = 0; e < M.num_edges(); ++e)
        if (C.vertex_color[M.vertex_of(2 * e + 1)] != (C.vertex_color[M.vertex_of(2 * e)] + 1) % (C.r + 1))
            fail("edges go from color i to i+1 mod r+1");
    std::vector<int> white, black;
    for (int f = 0; f < M.num_faces(); ++f) {
        if (f == hole)
            continue;
        const auto& face = M.faces()[f];
        for (int h : face)
            if (h % 2 != face[0] % 2)
                fail("face color condition");
        if (face.size() % (C.r + 1))
            fail("face degrees are multiples of r+1");
        int deg = static_cast<int>(face.size()) / (C.r + 1);
        (face[0] % 2 ? white : black).push_back(deg);
    }
    std::vector<int> active(C.r + 1, 0);
    for (int v = 0; v < M.num_vertices(); ++v) {
        bool act = false;
        for (int h : M.vertices()[v])
            if (h % 2 == 1 && C.kind[h / 2] == EdgeKind::WhiteBoundary)
                act = true;
        active[C.vertex_color[v]] += act;
    }
    for (int c = 0; c <= C.r; ++c)
        if (active[c] != C.d - 1)
            fail("d-1 active vertices of each color");
    CactusType t;
    t.mu = Partition(white);
    t.nu = Partition(black);
    t.g = euler_genus(M);
    if (t.mu.size() != C.d || t.nu.size() != C.d)
        fail("face degrees sum to (r+1)d per color");
    if (C.r != t.mu.length() + t.nu.length() - 2 + 2 * t.g)
        fail("r = m + n - 2 + 2g");
    return t;
}

BoundaryCactus gamma_cut(const MarkedGalaxy& G, const DistanceLabeling& L)
{
    const auto& M = G.map;
    const int E = M.num_edges();
    BoundaryCactus C;
    C.d = G.d;
    C.r = G.r;
    std::vector<int> internal(E, -1), wcopy(E, -1), bcopy(E, -1);
    for (int e = 0; e < E; ++e) {
        if (L.weight[e] > 0) {
            internal[e] = static_cast<int>(C.kind.size());
            C.kind.push_back(EdgeKind::Internal);
            C.galaxy_edge.push_back(e);
        } else {
            wcopy[e] = static_cast<int>(C.kind.size());
            C.kind.push_back(EdgeKind::WhiteBoundary);
            C.galaxy_edge.push_back(e);
            bcopy[e] = static_cast<int>(C.kind.size());
            C.kind.push_back(EdgeKind::BlackBoundary);
            C.galaxy_edge.push_back(e);
        }
    }
    const int GAP = -1;
    std::vector<int> rot(2 * C.kind.size(), -1), galaxy_vertex_of(2 * C.kind.size(), -1);
    for (int v = 0; v < M.num_vertices(); ++v) {
        std::vector<int> dbl;
        for (int h : M.vertices()[v]) {
            int e = h / 2, s = h % 2;
            if (internal[e] >= 0)
                dbl.push_back(2 * internal[e] + s);
            else if (s == 0)
                dbl.insert(dbl.end(), {2 * wcopy[e], GAP, 2 * bcopy[e]});
            else
                dbl.insert(dbl.end(), {2 * bcopy[e] + 1, GAP, 2 * wcopy[e] + 1});
        }
        std::vector<std::vector<int>> sectors;
        auto gap = std::find(dbl.begin(), dbl.end(), GAP);
        if (gap == dbl.end()) {
            sectors.push_back(dbl);
        } else {
            std::rotate(dbl.begin(), gap + 1, dbl.end());
            sectors.emplace_back();
            for (int x : dbl) {
                if (x == GAP)
                    sectors.emplace_back();
                else
                    sectors.back().push_back(x);
            }
            // the rotated list ends just before the first gap
        }
        auto in = geodesic_in_darts(G, L, v);
        if (in.size() == 2) {
            auto find_sector = [&](int dart) {
                for (size_t i = 0; i < sectors.size(); ++i)
                    if (std::find(sectors[i].begin(), sectors[i].end(), dart) != sectors[i].end())
                        return static_cast<int>(i);
                throw std::logic_error("gamma: dart not found in sectors");
            };
            int sa = find_sector(2 * wcopy[in[0] / 2] + 1), sb = find_sector(2 * wcopy[in[1] / 2] + 1);
            sectors[sa].insert(sectors[sa].end(), sectors[sb].begin(), sectors[sb].end());
            sectors.erase(sectors.begin() + sb);
        }
        for (const auto& s : sectors)
            for (size_t i = 0; i < s.size(); ++i) {
                rot[s[i]] = s[(i + 1) % s.size()];
                galaxy_vertex_of[s[i]] = v;
            }
    }
    C.map = CombinatorialMap::from_rotation(rot);
    C.vertex_color.assign(C.map.num_vertices(), -1);
    for (int h = 0; h < C.map.num_darts(); ++h)
        C.vertex_color[C.map.vertex_of(h)] = G.vertex_color[galaxy_vertex_of[h]];
    return C;
}

CornerLabeling canonical_corner_labeling(const BoundaryCactus& C, int start)
{
    CornerLabeling out;
    const auto& M = C.map;
    int hole = C.hole_face();
    out.vertex_label.assign(M.num_vertices(), -1);
    if (hole < 0) {
        // no boundary at all: only the one-vertex cactus of degree 1
        std::fill(out.vertex_label.begin(), out.vertex_label.end(), 0);
        out.coherent = M.num_vertices() == 1;
        out.proper = out.coherent && C.vertex_color[0] == 0;
        return out;
    }
    std::vector<int> darts = M.faces()[hole];
    int n = static_cast<int>(darts.size());
    std::rotate(darts.begin(), darts.begin() + ((start % n) + n) % n, darts.end());
    std::vector<int> labels(n);
    int cur = 0;
    for (int i = 0; i < n; ++i) {
        labels[i] = cur;
        cur += C.kind[darts[i] / 2] == EdgeKind::WhiteBoundary ? 1 : -1;
    }
    if (cur != 0)
        throw CactusError("corner labeling: unbalanced boundary");
    int mn = *std::min_element(labels.begin(), labels.end());
    for (int& x : labels)
        x -= mn;
    out.hole_darts = darts;
    out.labels = labels;
    out.coherent = true;
    for (int i = 0; i < n; ++i) {
        int v = M.vertex_of(darts[i]);
        if (out.vertex_label[v] < 0)
            out.vertex_label[v] = labels[i];
        else if (out.vertex_label[v] != labels[i])
            out.coherent = false;
    }
    for (int x : out.vertex_label)
        if (x < 0)
            out.coherent = false;
    out.proper = out.coherent;
    if (out.coherent)
        for (int v = 0; v < M.num_vertices(); ++v)
            if (out.vertex_label[v] == 0 && C.vertex_color[v] != 0)
                out.proper = false;
    if (!out.coherent)
        std::fill(out.vertex_label.begin(), out.vertex_label.end(), -1);
    return out;
}

BoundaryCactus shift_cactus(const BoundaryCactus& C, int k)
{
    BoundaryCactus S = C;
    int mod = C.r + 1;
    for (int& c : S.vertex_color)
        c = ((c + k) % mod + mod) % mod;
    return S;
}

// ---------------------------------------------------------------- glue

MarkedGalaxy glue(const BoundaryCactus& C)
{
    auto lab = canonical_corner_labeling(C);
    if (!lab.coherent)
        throw CactusError("glue: cactus is not coherent");
    if (!lab.proper)
        throw CactusError("glue: cactus is not proper");
    const auto& M = C.map;
    const int nE = M.num_edges();
    std::vector<int> partner(nE, -1);
    int start = -1;
    if (!lab.hole_darts.empty()) {
        int n = static_cast<int>(lab.hole_darts.size());
        for (int i = 0; i < n && start < 0; ++i)
            if (lab.labels[i] == 0)
                start = i;
        std::vector<int> stack;
        for (int i = 0; i < n; ++i) {
            int h = lab.hole_darts[(start + i) % n];
            if (C.kind[h / 2] == EdgeKind::WhiteBoundary) {
                stack.push_back(h / 2);
            } else {
                int w = stack.back();
                stack.pop_back();
                partner[w] = h / 2;
                partner[h / 2] = w;
            }
        }
    }
    std::vector<int> gedge(nE, -1);
    int next = 0;
    for (int e = 0; e < nE; ++e) {
        if (C.kind[e] == EdgeKind::Internal)
            gedge[e] = next++;
        else if (C.kind[e] == EdgeKind::WhiteBoundary) {
            gedge[e] = next;
            gedge[partner[e]] = next++;
        }
    }
    auto img = [&](int x) { return 2 * gedge[x / 2] + x % 2; };
    std::vector<int> rot(2 * next, -1);
    for (int x = 0; x < M.num_darts(); ++x) {
        if (C.on_hole(x))
            continue;
        int gx = img(x);
        if (rot[gx] >= 0)
            throw CactusError("glue: dart rotation defined twice");
        rot[gx] = img(M.rotation(x));
    }
    for (int x : rot)
        if (x < 0)
            throw CactusError("glue: dart rotation undefined");
    MarkedGalaxy G;
    G.map = CombinatorialMap::from_rotation(rot);
    G.d = C.d;
    G.r = C.r;
    G.vertex_color.assign(G.map.num_vertices(), -1);
    for (int x = 0; x < M.num_darts(); ++x) {
        int v = G.map.vertex_of(img(x));
        int c = C.vertex_color[M.vertex_of(x)];
        if (G.vertex_color[v] >= 0 && G.vertex_color[v] != c)
            throw CactusError("glue: glued vertices carry different colors");
        G.vertex_color[v] = c;
    }
    G.marked_vertex = start >= 0 ? G.map.vertex_of(img(lab.hole_darts[start])) : G.map.vertex_of(0);
    validate_galaxy(G);
    return G;
}

// ---------------------------------------------------------------- Π and its inverse

namespace {

struct FaceSlots {
    std::vector<std::vector<int>> polygons[2];   // per color: node ids
    std::vector<int> slot_node[2];               // per color, per edge: node owning it (-1 if none)
    std::vector<std::vector<int>> sequences[2];  // per color, per face: edges along the orientation
};

FaceSlots face_slots(const BoundaryCactus& C)
{
    const auto& M = C.map;
    const int R = C.r + 1;
    FaceSlots S;
    for (int c = 0; c < 2; ++c)
        S.slot_node[c].assign(M.num_edges(), -1);
    int count[2] = {0, 0};
    for (int f = 0; f < M.num_faces(); ++f) {
        FaceColor fc = C.face_color(f);
        if (fc == FaceColor::Hole)
            continue;
        int col = fc == FaceColor::Black ? 1 : 0;
        std::vector<int> seq;
        for (int h : M.faces()[f])
            seq.push_back(h / 2);
        if (col == 0)
            std::reverse(seq.begin(), seq.end());
        auto head_color = [&](int e) { return C.vertex_color[M.vertex_of(2 * e + 1)]; };
        auto z = std::find_if(seq.begin(), seq.end(), [&](int e) { return head_color(e) == 0; });
        if (z == seq.end())
            throw CactusError("retract: face without a color-0 corner");
        std::rotate(seq.begin(), z, seq.end());
        std::vector<int> poly;
        for (size_t t = 0; t < seq.size(); ++t) {
            if (head_color(seq[t]) != static_cast<int>(t % R))
                throw CactusError("retract: colors do not increase along a face");
            if (t % R == 0)
                poly.push_back(count[col]++);
            S.slot_node[col][seq[t]] = poly.back();
        }
        S.polygons[col].push_back(poly);
        S.sequences[col].push_back(seq);
    }
    return S;
}

} // namespace

HurwitzMobile retract_pi(const BoundaryCactus& C)
{
    const auto& M = C.map;
    const int R = C.r + 1;
    auto lab = canonical_corner_labeling(C);
    if (!lab.coherent)
        throw CactusError("retract: cactus is not coherent, weights are undefined");
    FaceSlots S = face_slots(C);
    HurwitzMobile out;
    out.white_polygons = S.polygons[0];
    out.black_polygons = S.polygons[1];
    for (int e = 0; e < M.num_edges(); ++e) {
        if (C.kind[e] != EdgeKind::Internal)
            continue;
        int x = M.vertex_of(2 * e), y = M.vertex_of(2 * e + 1);
        int num = lab.vertex_label[x] + 1 - lab.vertex_label[y];
        if (num <= 0 || num % R)
            throw CactusError("retract: internal edge weight is not a positive integer");
        MobileEdge me;
        me.a = {false, S.slot_node[0][e]};
        me.b = {true, S.slot_node[1][e]};
        me.weight = num / R;
        me.label = C.vertex_color[y];
        out.edges.push_back(me);
    }
    // split vertices: two incoming white boundary edges, one zero edge between their subregions
    std::map<int, std::vector<int>> white_in;
    for (int e = 0; e < M.num_edges(); ++e)
        if (C.kind[e] == EdgeKind::WhiteBoundary)
            white_in[M.vertex_of(2 * e + 1)].push_back(S.slot_node[0][e]);
    for (const auto& [v, nodes] : white_in) {
        if (nodes.size() > 2)
            throw CactusError("retract: vertex with more than two incoming white boundary edges");
        if (nodes.size() == 2) {
            MobileEdge me;
            me.a = {false, nodes[0]};
            me.b = {false, nodes[1]};
            me.weight = 0;
            me.label = C.vertex_color[v];
            out.edges.push_back(me);
        }
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const MobileEdge& a, const MobileEdge& b) { return a.label < b.label; });
    out.excess = static_cast<int>(out.edges.size()) - static_cast<int>(out.white_polygons.size() + out.black_polygons.size()) + 1;
    validate_mobile(out);
    return out;
}

BoundaryCactus expand_pi_inverse(const HurwitzMobile& M)
{
    auto t = validate_mobile(M);
    const int d = t.d, r = t.r, R = r + 1;
    auto ws = node_slots(M.white_polygons, d);
    auto bs = node_slots(M.black_polygons, d);
    // slot (color, polygon, position, c) -> edge id
    std::map<std::array<int, 4>, int> slot_edge;
    BoundaryCactus C;
    C.d = d;
    C.r = r;
    std::map<std::pair<int, int>, const MobileEdge*> positive_at_white;   // (white node, label)
    for (const auto& e : M.edges)
        if (e.weight > 0)
            positive_at_white[{e.a.node, e.label}] = &e;
    for (size_t p = 0; p < M.white_polygons.size(); ++p)
        for (size_t k = 0; k < M.white_polygons[p].size(); ++k)
            for (int c = 0; c < R; ++c) {
                int id = static_cast<int>(C.kind.size());
                slot_edge[{0, static_cast<int>(p), static_cast<int>(k), c}] = id;
                auto it = positive_at_white.find({M.white_polygons[p][k], c});
                if (it != positive_at_white.end()) {
                    C.kind.push_back(EdgeKind::Internal);
                    const auto& bslot = bs[it->second->b.node];
                    slot_edge[{1, bslot.polygon, bslot.position, c}] = id;
                } else {
                    C.kind.push_back(EdgeKind::WhiteBoundary);
                }
            }
    for (size_t p = 0; p < M.black_polygons.size(); ++p)
        for (size_t k = 0; k < M.black_polygons[p].size(); ++k)
            for (int c = 0; c < R; ++c) {
                std::array<int, 4> key{1, static_cast<int>(p), static_cast<int>(k), c};
                if (slot_edge.count(key))
                    continue;
                slot_edge[key] = static_cast<int>(C.kind.size());
                C.kind.push_back(EdgeKind::BlackBoundary);
            }
    const int nd = 2 * static_cast<int>(C.kind.size());
    std::vector<int> rot(nd, -1), pre(nd, -1);
    auto link = [&](int a, int b) {
        if (rot[a] >= 0 || pre[b] >= 0)
            throw MobileError("expand: rotation defined twice");
        rot[a] = b;
        pre[b] = a;
    };
    for (int col = 0; col < 2; ++col) {
        const auto& polys = col ? M.black_polygons : M.white_polygons;
        for (size_t p = 0; p < polys.size(); ++p) {
            std::vector<int> seq;
            for (size_t k = 0; k < polys[p].size(); ++k)
                for (int c = 0; c < R; ++c)
                    seq.push_back(slot_edge.at({col, static_cast<int>(p), static_cast<int>(k), c}));
            for (size_t i = 0; i < seq.size(); ++i) {
                int e = seq[i], f = seq[(i + 1) % seq.size()];
                if (col)
                    link(2 * f, 2 * e + 1);
                else
                    link(2 * e + 1, 2 * f);
            }
        }
    }
    // chains of the partial rotation, closed through hole corners
    std::vector<int> chain_of(nd, -1), chain_start, chain_end;
    for (int s = 0; s < nd; ++s) {
        if (pre[s] >= 0)
            continue;
        int id = static_cast<int>(chain_start.size());
        int x = s;
        chain_of[x] = id;
        while (rot[x] >= 0) {
            x = rot[x];
            chain_of[x] = id;
        }
        chain_start.push_back(s);
        chain_end.push_back(x);
    }
    std::vector<char> chain_done(chain_start.size(), 0);
    for (const auto& e : M.edges) {
        if (e.weight > 0)
            continue;
        const auto& sa = ws[e.a.node];
        const auto& sb = ws[e.b.node];
        int ea = slot_edge.at({0, sa.polygon, sa.position, e.label});
        int eb = slot_edge.at({0, sb.polygon, sb.position, e.label});
        int c1 = chain_of[2 * ea + 1], c2 = chain_of[2 * eb + 1];
        if (c1 < 0 || c2 < 0 || c1 == c2 || chain_done[c1] || chain_done[c2])
            throw MobileError("expand: zero-weight edge does not join two boundary sectors");
        rot[chain_end[c1]] = chain_start[c2];
        rot[chain_end[c2]] = chain_start[c1];
        chain_done[c1] = chain_done[c2] = 1;
    }
    for (size_t c = 0; c < chain_start.size(); ++c)
        if (!chain_done[c])
            rot[chain_end[c]] = chain_start[c];
    C.map = CombinatorialMap::from_rotation(rot);
    C.vertex_color.assign(C.map.num_vertices(), -1);
    std::vector<int> edge_color(C.kind.size());
    for (const auto& [key, id] : slot_edge)
        edge_color[id] = key[3];
    for (int h = 0; h < nd; ++h) {
        int c = h % 2 ? edge_color[h / 2] : (edge_color[h / 2] + R - 1) % R;
        int& vc = C.vertex_color[C.map.vertex_of(h)];
        if (vc >= 0 && vc != c)
            throw MobileError("expand: inconsistent vertex colors");
        vc = c;
    }
    try {
        C.hole_face();
    } catch (const CactusError& e) {
        throw MobileError(std::string("expand: ") + e.what());
    }
    int g = euler_genus(C.map);
    if (2 * g != M.excess)
        throw MobileError("expand: degenerate excess (genus " + std::to_string(g) + " for excess " +
                          std::to_string(M.excess) + ")");
    return C;
}

// ---------------------------------------------------------------- Φ

HurwitzMobile phi(const MarkedGalaxy& G)
{
    return retract_pi(gamma_cut(G, distance_labeling(G)));
}

MarkedGalaxy phi_inverse(const HurwitzMobile& M)
{
    BoundaryCactus C = expand_pi_inverse(M);
    auto lab = canonical_corner_labeling(C);
    if (!lab.coherent)
        throw MobileError("phi_inverse: mobile is not coherent");
    if (canonical_code(retract_pi(C)) != canonical_code(M))
        throw MobileError("phi_inverse: weights disagree with the corner labels");
    int shift = 0;
    for (int v = 0; v < C.map.num_vertices(); ++v)
        if (lab.vertex_label[v] == 0)
            shift = C.r + 1 - C.vertex_color[v];
    return glue(shift_cactus(C, shift));
}

MobileClass classify_mobile(const HurwitzMobile& M)
{
    BoundaryCactus C;
    try {
        C = expand_pi_inverse(M);
    } catch (const MobileError& e) {
        if (std::string(e.what()).find("degenerate excess") != std::string::npos)
            return MobileClass::Degenerate;
        throw;
    }
    if (!canonical_corner_labeling(C).coherent)
        return MobileClass::Incoherent;
    try {
        if (canonical_code(retract_pi(C)) == canonical_code(M))
            return MobileClass::Coherent;
    } catch (const std::invalid_argument&) {
    }
    return MobileClass::WeightMismatch;
}

std::string to_string(MobileClass c)
{
    switch (c) {
    case MobileClass::Coherent: return "coherent";
    case MobileClass::Incoherent: return "incoherent";
    case MobileClass::WeightMismatch: return "weight_mismatch";
    case MobileClass::Degenerate: return "degenerate";
    }
    return "?";
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const SplitTree& T)
{
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : T.nodes)
        nodes.push_back({{"galaxy_vertex", n.galaxy_vertex},
                         {"color", n.color},
                         {"delta", n.delta},
                         {"parent", n.parent},
                         {"children", n.children}});
    return {{"nodes", nodes}, {"contour", T.contour()}};
}

nlohmann::json to_json(const BoundaryCactus& C)
{
    nlohmann::json j = C.map.to_json();
    std::vector<std::string> kinds, fc;
    for (EdgeKind k : C.kind)
        kinds.push_back(k == EdgeKind::Internal ? "internal" : k == EdgeKind::WhiteBoundary ? "white_boundary" : "black_boundary");
    for (int f = 0; f < C.map.num_faces(); ++f)
        fc.push_back(to_string(C.face_color(f)));
    j["edge_kinds"] = kinds;
    j["face_colors"] = fc;
    j["vertex_colors"] = C.vertex_color;
    return j;
}

nlohmann::json trace_json(const MarkedGalaxy& G)
{
    auto L = distance_labeling(G);
    auto T = theta_tree(G, L);
    auto C = gamma_cut(G, L);
    auto lab = canonical_corner_labeling(C);
    return {{"galaxy", to_json(G)},
            {"delta", L.delta},
            {"weights", L.weight},
            {"theta", to_json(T)},
            {"gamma", to_json(C)},
            {"corner_labels", {{"hole_darts", lab.hole_darts}, {"labels", lab.labels}, {"coherent", lab.coherent}, {"proper", lab.proper}}},
            {"mobile", to_json(retract_pi(C))}};
}

} // namespace hurwitz
