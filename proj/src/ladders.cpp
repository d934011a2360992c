#include "tokengraph/ladders.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tokengraph/line_graph.hpp"

namespace tokengraph {

std::vector<std::array<int, 4>> induced_4cycles(const Graph& f) {
    auto edges = f.edges();
    std::set<std::array<int, 4>> found;
    auto canon = [&](int a, int b, int c, int d) {
        // cycle a-b-c-d-a; rotate/reflect so position 0 is minimal, then b < d
        std::array<int, 4> cyc{a, b, c, d};
        int mi = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
        std::array<int, 4> r;
        for (int i = 0; i < 4; ++i) r[i] = cyc[(mi + i) % 4];
        if (r[1] > r[3]) std::swap(r[1], r[3]);
        return r;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            int a = edges[i].u, b = edges[i].v, c = edges[j].u, d = edges[j].v;
            if (a == c || a == d || b == c || b == d) continue;
            // opposite edges {a,b} and {c,d}: two completion patterns
            if (f.adjacent(b, c) && f.adjacent(d, a) && !f.adjacent(a, c) && !f.adjacent(b, d))
                found.insert(canon(a, b, c, d));
            if (f.adjacent(b, d) && f.adjacent(c, a) && !f.adjacent(a, d) && !f.adjacent(b, c))
                found.insert(canon(a, b, d, c));
        }
    }
    return {found.begin(), found.end()};
}

int LadderClasses::edge_id(int u, int v) const {
    Edge e(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e)) throw DomainError("edge_id: not an edge");
    return static_cast<int>(it - edges.begin());
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

LadderClasses ladder_classes(const Graph& f) {
    LadderClasses out;
    out.edges = f.edges();
    out.cycles = induced_4cycles(f);
    UnionFind uf(static_cast<int>(out.edges.size()));
    for (const auto& cyc : out.cycles) {
        auto [a, b, c, d] = cyc;
        int ab = out.edge_id(a, b), bc = out.edge_id(b, c), cd = out.edge_id(c, d), da = out.edge_id(d, a);
        uf.unite(ab, cd);
        uf.unite(bc, da);
        for (int x : {ab, bc, cd, da})
            for (int y : {ab, bc, cd, da})
                if (x < y) out.cocycle_.insert((static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y));
    }
    out.class_of.assign(out.edges.size(), -1);
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
        int root = uf.find(static_cast<int>(e));
        if (out.class_of[root] < 0) {
            out.class_of[root] = static_cast<int>(out.classes.size());
            out.classes.emplace_back();
        }
        out.class_of[e] = out.class_of[root];
        out.classes[out.class_of[e]].push_back(static_cast<int>(e));
    }
    return out;
}

bool same_base_edge_check(const TokenGraph& tg, const LadderClasses& classes) {
    for (const auto& cls : classes.classes) {
        std::uint64_t want = 0;
        for (int eid : cls) {
            const Edge& e = classes.edges[eid];
            std::uint64_t diff = tg.subsets[e.u] ^ tg.subsets[e.v];
            if (eid == cls.front())
                want = diff;
            else if (diff != want)
                return false;
        }
    }
    return true;
}

LocalView local_view(const Graph& f, const LadderClasses& classes, int a) {
    LocalView out;
    out.anchor = a;
    out.incident = f.neighbors(a);  // sorted
    int d = static_cast<int>(out.incident.size());
    out.line_graph = Graph(d);
    for (int p = 0; p < d; ++p) {
        int ep = classes.edge_id(a, out.incident[p]);
        for (int q = p + 1; q < d; ++q) {
            int eq = classes.edge_id(a, out.incident[q]);
            // incident base edges are exactly the pairs NOT in a common
            // induced 4-cycle
            if (!classes.share_cycle(ep, eq)) out.line_graph.add_edge(p, q);
        }
    }
    RootGraph rg;
    try {
        rg = invert_line_graph(out.line_graph, /*triangle_free_root=*/true);
    } catch (const StructureError& e) {
        throw StructureError("local view", "vertex " + std::to_string(a) + ": " + e.what());
    }
    out.resolved = std::move(rg.root);
    out.edge_to_pair = std::move(rg.vertex_to_root_edge);
    return out;
}

}  // namespace tokengraph
