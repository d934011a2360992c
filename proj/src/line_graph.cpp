#include "tokengraph/line_graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace tokengraph {

namespace {

using Cell = std::vector<int>;  // sorted line-graph vertices

RootGraph build_root(const Graph& l, const std::vector<Cell>& cells) {
    int nl = l.order();
    std::vector<std::vector<int>> cells_of(nl);
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cells_of[v].push_back(static_cast<int>(c));
    int next = static_cast<int>(cells.size());
    std::vector<std::pair<int, int>> ends(nl);
    for (int v = 0; v < nl; ++v) {
        auto& cs = cells_of[v];
        if (cs.size() > 2) throw StructureError("line-graph inversion", "vertex lies in three cells");
        int a = cs.size() > 0 ? cs[0] : next++;
        int b = cs.size() > 1 ? cs[1] : next++;
        ends[v] = {a, b};
    }
    Graph root(next);
    for (int v = 0; v < nl; ++v) {
        auto [a, b] = ends[v];
        if (a == b || root.adjacent(a, b)) throw StructureError("line-graph inversion", "duplicate root edge");
        root.add_edge(a, b);
    }
    // exact labeled check: L(root) == l
    for (int u = 0; u < nl; ++u)
        for (int v = u + 1; v < nl; ++v) {
            bool share = ends[u].first == ends[v].first || ends[u].first == ends[v].second ||
                         ends[u].second == ends[v].first || ends[u].second == ends[v].second;
            if (share != l.adjacent(u, v)) throw StructureError("line-graph inversion", "root fails the line-graph check");
        }
    return {std::move(root), std::move(ends)};
}

std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    std::vector<int> out;
    for (int w = 0; w < g.row_words(); ++w) {
        std::uint64_t bits = g.row_word(u, w) & g.row_word(v, w);
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

// Canonical cells for triangle-free roots: the cell of an edge {e,f} is
// {e,f} plus all common neighbors.
std::vector<Cell> triangle_free_cells(const Graph& l) {
    std::set<Cell> cells;
    for (auto [e, f] : l.edges()) {
        Cell c = common_neighbors(l, e, f);
        c.push_back(e);
        c.push_back(f);
        std::sort(c.begin(), c.end());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!l.adjacent(c[i], c[j]))
                    throw StructureError("line-graph inversion", "cell is not a clique (root not triangle-free?)");
        cells.insert(std::move(c));
    }
    std::vector<Cell> out(cells.begin(), cells.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            Cell inter;
            std::set_intersection(out[i].begin(), out[i].end(), out[j].begin(), out[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() > 1) throw StructureError("line-graph inversion", "cells share two vertices");
        }
    return out;
}

// Backtracking Krausz partition for general roots.
struct KrauszSearch {
    const Graph& l;
    std::vector<Edge> edges;
    std::vector<char> covered;       // per edge id
    std::vector<int> cell_count;     // per vertex
    std::vector<Cell> cells;
    std::vector<Cell> result;
    bool done = false;

    explicit KrauszSearch(const Graph& l_) : l(l_), edges(l_.edges()), covered(edges.size(), 0), cell_count(l_.order(), 0) {}

    int edge_id(int u, int v) const {
        Edge e(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        return static_cast<int>(it - edges.begin());
    }

    bool cell_ok(const Cell& c) const {
        for (int v : c)
            if (cell_count[v] >= 2) return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (!l.adjacent(c[i], c[j])) return false;
                if (covered[edge_id(c[i], c[j])]) return false;
            }
        return true;
    }

    void place(const Cell& c, int delta) {
        for (int v : c) cell_count[v] += delta;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) covered[edge_id(c[i], c[j])] += delta;
    }

    void rec() {
        if (done) return;
        int eid = -1;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!covered[i]) {
                eid = static_cast<int>(i);
                break;
            }
        if (eid < 0) {
            result = cells;
            done = true;
            return;
        }
        int e = edges[eid].u, f = edges[eid].v;
        if (cell_count[e] >= 2 || cell_count[f] >= 2) return;  // dead end
        std::vector<int> cn;
        for (int w : common_neighbors(l, e, f))
            if (cell_count[w] < 2) cn.push_back(w);
        // all cliques within cn, larger first
        std::vector<Cell> candidates;
        std::vector<int> pick;
        auto gen = [&](auto&& self, std::size_t at) -> void {
            Cell c = pick;
            c.push_back(e);
            c.push_back(f);
            std::sort(c.begin(), c.end());
            candidates.push_back(std::move(c));
            for (std::size_t i = at; i < cn.size(); ++i) {
                bool clique = true;
                for (int w : pick)
                    if (!l.adjacent(w, cn[i])) {
                        clique = false;
                        break;
                    }
                if (!clique) continue;
                pick.push_back(cn[i]);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        gen(gen, 0);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Cell& a, const Cell& b) { return a.size() > b.size(); });
        for (const Cell& c : candidates) {
            if (!cell_ok(c)) continue;
            place(c, 1);
            cells.push_back(c);
            rec();
            cells.pop_back();
            place(c, -1);
            if (done) return;
        }
    }
};

}  // namespace

RootGraph invert_line_graph(const Graph& l, bool triangle_free_root) {
    if (triangle_free_root) return build_root(l, triangle_free_cells(l));
    KrauszSearch s(l);
    s.rec();
    if (!s.done) throw StructureError("line-graph inversion", "no Krausz partition exists");
    return build_root(l, s.result);
}

}  // namespace tokengraph
