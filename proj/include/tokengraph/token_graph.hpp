#ifndef TOKENGRAPH_TOKEN_GRAPH_HPP
#define TOKENGRAPH_TOKEN_GRAPH_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tokengraph/graph.hpp"
#include "tokengraph/subsets.hpp"

namespace tokengraph {

// F_k(base): vertices are the k-subsets of V(base) in colex order (numeric
// bitmask order); two subsets are adjacent iff their symmetric difference is
// an edge of base.
struct TokenGraph {
    Graph base;
    int k = 0;
    std::vector<std::uint64_t> subsets;  // vertex index -> bitmask
    Graph graph;

    int index(std::uint64_t subset) const {
        auto it = index_of.find(subset);
        if (it == index_of.end()) throw DomainError("subset is not a vertex of this token graph");
        return it->second;
    }
    std::vector<int> subset_vertices(int idx) const { return mask_to_vertices(subsets[idx]); }

    std::unordered_map<std::uint64_t, int> index_of;
};

TokenGraph build_token_graph(const Graph& g, int k);

// The map A -> V(G)\A as an isomorphism from src = F_k(G) to dst = F_{n-k}(G).
Isomorphism complement_map(const TokenGraph& src, const TokenGraph& dst);

// iota lift: the isomorphism F_k(H) -> F_k(G) induced by base_iso: H -> G.
Isomorphism lift_isomorphism(const TokenGraph& src, const TokenGraph& dst, const Isomorphism& base_iso);

struct KappaSet {
    int pivot = 0;
    std::vector<int> members;  // token-graph vertex indices, sorted
};

KappaSet kappa(const TokenGraph& tg, int u);

// family: subsets of V(f) given as sorted vertex-index lists.
bool is_reconstruction_family(const Graph& f, const std::vector<std::vector<int>>& family, int n, int k);

struct FamilyGraph {
    Graph g;                              // G_R over family indices
    std::vector<std::vector<int>> stabs;  // per f-vertex: sorted family indices containing it
};

// Requires the family to pass is_reconstruction_family; verifies that the
// stab map is an isomorphism onto F_k(G_R).
FamilyGraph family_to_graph(const Graph& f, const std::vector<std::vector<int>>& family, int n, int k);

}  // namespace tokengraph

#endif
