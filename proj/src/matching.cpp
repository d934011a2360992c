#include "tokengraph/matching.hpp"

#include <algorithm>
#include <bit>

namespace tokengraph {

namespace {

// Maximum matching size on the subgraph induced by `alive` (vertex bitmask).
int match_rec(const Graph& g, std::uint64_t alive) {
    // first live vertex with a live neighbor
    std::uint64_t scan = alive;
    while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        std::uint64_t nb = g.row_word(u, 0) & alive;
        if (!nb) continue;
        int best = match_rec(g, alive & ~(1ull << u));  // u stays unmatched
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            best = std::max(best, 1 + match_rec(g, alive & ~(1ull << u) & ~(1ull << v)));
        }
        return best;
    }
    return 0;
}

void check_guard(const Graph& g, int max_edges) {
    if (g.order() > 64) throw SizeError("maximum_matching: more than 64 vertices");
    if (g.num_edges() > max_edges)
        throw SizeError("maximum_matching: edge count exceeds bound " + std::to_string(max_edges));
}

}  // namespace

int matching_number(const Graph& g, int max_edges) {
    check_guard(g, max_edges);
    std::uint64_t alive = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
    return match_rec(g, alive);
}

Matching maximum_matching(const Graph& g, int max_edges) {
    check_guard(g, max_edges);
    std::uint64_t alive = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
    int target = match_rec(g, alive);
    Matching out;
    auto edges = g.edges();  // already lex sorted
    for (const Edge& e : edges) {
        if (out.size() == static_cast<std::size_t>(target)) break;
        if (!(alive >> e.u & 1) || !(alive >> e.v & 1)) continue;
        std::uint64_t rest = alive & ~(1ull << e.u) & ~(1ull << e.v);
        if (1 + static_cast<int>(out.size()) + match_rec(g, rest) == target) {
            out.push_back(e);
            alive = rest;
        }
    }
    return out;
}

}  // namespace tokengraph
