#include "hurwitz/mobile.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

std::vector<NodeSlot> node_slots(const std::vector<std::vector<int>>& polygons, int d)
{
    std::vector<NodeSlot> s(d);
    for (size_t p = 0; p < polygons.size(); ++p)
        for (size_t k = 0; k < polygons[p].size(); ++k) {
            int x = polygons[p][k];
            if (x < 0 || x >= d || s[x].polygon >= 0)
                throw MobileError("mobile invariant violated: every node lies on exactly one polygon");
            s[x] = {static_cast<int>(p), static_cast<int>(k)};
        }
    for (const auto& slot : s)
        if (slot.polygon < 0)
            throw MobileError("mobile invariant violated: every node lies on exactly one polygon");
    return s;
}

static int total_nodes(const std::vector<std::vector<int>>& polys)
{
    int n = 0;
    for (const auto& p : polys)
        n += static_cast<int>(p.size());
    return n;
}

MobileType validate_mobile(const HurwitzMobile& M, bool labeled)
{
    auto fail = [](const std::string& what) { throw MobileError("mobile invariant violated: " + what); };
    const int m = static_cast<int>(M.white_polygons.size()), n = static_cast<int>(M.black_polygons.size());
    const int d = total_nodes(M.white_polygons);
    if (m == 0 || n == 0)
        fail("at least one polygon of each color");
    if (total_nodes(M.black_polygons) != d)
        fail("d white nodes and d black nodes");
    for (const auto& polys : {&M.white_polygons, &M.black_polygons})
        for (const auto& p : *polys)
            if (p.empty())
                fail("polygons are non-empty");
    auto ws = node_slots(M.white_polygons, d);
    auto bs = node_slots(M.black_polygons, d);
    if (M.excess < 0 || M.excess % 2)
        fail("excess is a nonnegative even integer");
    const int r = m + n - 2 + M.excess;
    if (static_cast<int>(M.edges.size()) != m + n - 1 + M.excess)
        fail("m+n-1+excess edges");

    std::vector<char> seen(r + 1, 0);
    std::vector<int> wsum(m, 0), bsum(n, 0);
    std::vector<int> parent(m + n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : M.edges) {
        if (labeled) {
            if (e.label < 0 || e.label > r || seen[e.label])
                fail("labels pairwise distinct in 0..r");
            seen[e.label] = 1;
        }
        if (e.weight < 0)
            fail("weights are nonnegative");
        if (e.a.black)
            fail("first endpoint of an edge is white");
        if (e.a.node < 0 || e.a.node >= d || e.b.node < 0 || e.b.node >= d)
            fail("edge endpoints are nodes");
        if (e.weight == 0 && e.b.black)
            fail("zero-weight edges join two white polygons");
        if (e.weight > 0 && !e.b.black)
            fail("positive edges join a white and a black polygon");
        int pa = ws[e.a.node].polygon;
        int pb = e.b.black ? m + bs[e.b.node].polygon : ws[e.b.node].polygon;
        wsum[pa] += e.weight;
        if (e.b.black)
            bsum[pb - m] += e.weight;
        parent[find(pa)] = find(pb);
    }
    std::vector<int> wdeg, bdeg;
    for (int i = 0; i < m; ++i) {
        wdeg.push_back(static_cast<int>(M.white_polygons[i].size()));
        if (wsum[i] != wdeg.back())
            fail("weights around each i-gon sum to i");
    }
    for (int j = 0; j < n; ++j) {
        bdeg.push_back(static_cast<int>(M.black_polygons[j].size()));
        if (bsum[j] != bdeg.back())
            fail("weights around each i-gon sum to i");
    }
    for (int i = 0; i < m + n; ++i)
        if (find(i) != find(0))
            fail("connected");
    return {Partition(wdeg), Partition(bdeg), M.excess, d, r};
}

MobileEmbedding canonical_embedding(const HurwitzMobile& M)
{
    validate_mobile(M, false);
    const int d = total_nodes(M.white_polygons);
    int narcs = 2 * d;
    int ne = narcs + static_cast<int>(M.edges.size());
    // per vertex: incoming arc head dart, outgoing arc tail dart, incident edge darts
    std::vector<int> in_arc(2 * d), out_arc(2 * d);
    std::vector<std::vector<std::pair<int, int>>> incident(2 * d);   // (sort key, dart)
    int k = 0;
    for (int color = 0; color < 2; ++color) {
        const auto& polys = color ? M.black_polygons : M.white_polygons;
        for (const auto& p : polys)
            for (size_t i = 0; i < p.size(); ++i, ++k) {
                int from = color * d + p[i], to = color * d + p[(i + 1) % p.size()];
                out_arc[from] = 2 * k;
                in_arc[to] = 2 * k + 1;
            }
    }
    for (size_t e = 0; e < M.edges.size(); ++e) {
        const auto& E = M.edges[e];
        int key = E.label >= 0 ? E.label : static_cast<int>(e);
        int dart = 2 * (narcs + static_cast<int>(e));
        incident[E.a.node].push_back({2 * key, dart});
        incident[(E.b.black ? d : 0) + E.b.node].push_back({2 * key + 1, dart + 1});
    }
    std::vector<int> rot(2 * ne, -1);
    for (int v = 0; v < 2 * d; ++v) {
        auto inc = incident[v];
        std::sort(inc.begin(), inc.end());
        std::vector<int> seq{in_arc[v]};
        for (auto& [key, dart] : inc)
            seq.push_back(dart);
        seq.push_back(out_arc[v]);
        if (v < d)
            std::reverse(seq.begin(), seq.end());
        for (size_t i = 0; i < seq.size(); ++i)
            rot[seq[i]] = seq[(i + 1) % seq.size()];
    }
    MobileEmbedding emb;
    emb.map = CombinatorialMap::from_rotation(rot);
    emb.genus = euler_genus(emb.map);
    emb.non_polygon_faces = emb.map.num_faces() - static_cast<int>(M.white_polygons.size() + M.black_polygons.size());
    return emb;
}

HurwitzMobile shift_mobile(const HurwitzMobile& M)
{
    auto t = validate_mobile(M);
    const int d = t.d, r = t.r;
    auto ws = node_slots(M.white_polygons, d);
    auto bs = node_slots(M.black_polygons, d);
    auto advance = [&](NodeRef x) {
        const auto& slot = x.black ? bs[x.node] : ws[x.node];
        const auto& poly = x.black ? M.black_polygons[slot.polygon] : M.white_polygons[slot.polygon];
        x.node = poly[(slot.position + 1) % poly.size()];
        return x;
    };
    HurwitzMobile out = M;
    for (auto& e : out.edges) {
        if (e.label == r) {
            e.a = advance(e.a);
            e.b = advance(e.b);
        }
        e.label = (e.label + 1) % (r + 1);
    }
    return out;
}

namespace {

using Desc = std::vector<std::vector<int>>;

Desc min_rotation(const Desc& s)
{
    Desc best = s;
    for (size_t k = 1; k < s.size(); ++k) {
        Desc c(s.begin() + k, s.end());
        c.insert(c.end(), s.begin(), s.begin() + k);
        if (c < best)
            best = c;
    }
    return best;
}

void append(std::string& out, const Desc& p)
{
    out += '(';
    for (const auto& node : p) {
        out += '[';
        for (size_t i = 0; i < node.size(); ++i)
            out += (i ? "," : "") + std::to_string(node[i]);
        out += ']';
    }
    out += ')';
}

} // namespace

std::string canonical_code(const HurwitzMobile& M)
{
    auto t = validate_mobile(M);
    std::vector<std::vector<int>> wl(t.d), bl(t.d);
    std::vector<std::pair<int, int>> weights;
    for (const auto& e : M.edges) {
        wl[e.a.node].push_back(e.label);
        (e.b.black ? bl : wl)[e.b.node].push_back(e.label);
        weights.push_back({e.label, e.weight});
    }
    std::string code = "e" + std::to_string(M.excess);
    for (int color = 0; color < 2; ++color) {
        auto& labels = color ? bl : wl;
        for (auto& l : labels)
            std::sort(l.begin(), l.end());
        std::vector<Desc> descs;
        for (const auto& p : color ? M.black_polygons : M.white_polygons) {
            Desc s;
            for (int x : p)
                s.push_back(labels[x]);
            descs.push_back(min_rotation(s));
        }
        std::sort(descs.begin(), descs.end());
        code += color ? "B" : "W";
        for (const auto& s : descs)
            append(code, s);
    }
    std::sort(weights.begin(), weights.end());
    code += "E";
    for (auto [l, w] : weights)
        code += std::to_string(w) + ",";
    return code;
}

std::string face_labeled_code(const HurwitzMobile& M)
{
    auto t = validate_mobile(M, false);
    const int m = static_cast<int>(M.white_polygons.size());
    auto ws = node_slots(M.white_polygons, t.d);
    auto bs = node_slots(M.black_polygons, t.d);
    std::vector<std::vector<int>> wl(t.d), bl(t.d);
    auto poly_id = [&](NodeRef x) { return x.black ? m + bs[x.node].polygon : ws[x.node].polygon; };
    for (const auto& e : M.edges) {
        wl[e.a.node].push_back(poly_id(e.b) * 1000 + e.weight);
        (e.b.black ? bl : wl)[e.b.node].push_back(poly_id(e.a) * 1000 + e.weight);
    }
    std::string code;
    for (int color = 0; color < 2; ++color) {
        auto& lists = color ? bl : wl;
        code += color ? "B" : "W";
        for (const auto& p : color ? M.black_polygons : M.white_polygons) {
            Desc s;
            for (int x : p) {
                auto l = lists[x];
                std::sort(l.begin(), l.end());
                s.push_back(l);
            }
            append(code, min_rotation(s));
        }
    }
    return code;
}

static nlohmann::json node_json(const NodeRef& x)
{
    return {{"color", x.black ? "black" : "white"}, {"node", x.node}};
}

nlohmann::json to_json(const HurwitzMobile& M)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : M.edges)
        edges.push_back({{"a", node_json(e.a)}, {"b", node_json(e.b)}, {"w", e.weight}, {"label", e.label}});
    return {{"white_polygons", M.white_polygons},
            {"black_polygons", M.black_polygons},
            {"edges", edges},
            {"excess", M.excess}};
}

HurwitzMobile mobile_from_json(const nlohmann::json& j)
{
    HurwitzMobile M;
    M.white_polygons = j.at("white_polygons").get<std::vector<std::vector<int>>>();
    M.black_polygons = j.at("black_polygons").get<std::vector<std::vector<int>>>();
    M.excess = j.at("excess").get<int>();
    auto node = [](const nlohmann::json& x) {
        return NodeRef{x.at("color").get<std::string>() == "black", x.at("node").get<int>()};
    };
    for (const auto& e : j.at("edges"))
        M.edges.push_back({node(e.at("a")), node(e.at("b")), e.at("w").get<int>(), e.at("label").get<int>()});
    return M;
}

} // namespace hurwitz
