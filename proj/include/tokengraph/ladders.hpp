#ifndef TOKENGRAPH_LADDERS_HPP
#define TOKENGRAPH_LADDERS_HPP

#include <array>
#include <unordered_set>
#include <vector>

#include "tokengraph/graph.hpp"
#include "tokengraph/token_graph.hpp"

namespace tokengraph {

// Induced 4-cycles (a,b,c,d) in cyclic order, canonical rotation: a is the
// smallest vertex and b < d.
std::vector<std::array<int, 4>> induced_4cycles(const Graph& f);

// Edge partition generated by "disjoint opposite edges of an induced
// 4-cycle": two edges share a class iff a chain of such cycles links them.
struct LadderClasses {
    std::vector<Edge> edges;                // lex-sorted edge list of f
    std::vector<int> class_of;              // per edge id
    std::vector<std::vector<int>> classes;  // class -> sorted edge ids
    std::vector<std::array<int, 4>> cycles;

    int edge_id(int u, int v) const;
    // true iff the two edges lie together in some induced 4-cycle of f
    bool share_cycle(int eid1, int eid2) const {
        std::uint64_t a = static_cast<std::uint32_t>(std::min(eid1, eid2));
        std::uint64_t b = static_cast<std::uint32_t>(std::max(eid1, eid2));
        return cocycle_.count((a << 32) | b) > 0;
    }

    std::unordered_set<std::uint64_t> cocycle_;
};

LadderClasses ladder_classes(const Graph& f);

// For a token graph of a (C4,diamond)-free base: every class moves a token
// along one fixed base edge.
bool same_base_edge_check(const TokenGraph& tg, const LadderClasses& classes);

// The local view at a vertex: the subgraph of the hidden base graph spanned
// by the edges with exactly one endpoint in the anchor's configuration,
// reconstructed from f alone via 4-cycle incidence and line-graph inversion.
struct LocalView {
    int anchor = 0;
    std::vector<int> incident;                       // sorted neighbors b of anchor
    Graph line_graph;                                // over incident-edge positions
    Graph resolved;                                  // J_A
    std::vector<std::pair<int, int>> edge_to_pair;   // per incident position: J_A edge
};

LocalView local_view(const Graph& f, const LadderClasses& classes, int a);

}  // namespace tokengraph

#endif
