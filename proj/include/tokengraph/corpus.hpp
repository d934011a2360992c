#ifndef TOKENGRAPH_CORPUS_HPP
#define TOKENGRAPH_CORPUS_HPP

#include <optional>
#include <vector>

#include "tokengraph/graph.hpp"
#include "tokengraph/token_graph.hpp"

namespace tokengraph {

// All (C4,diamond)-free graphs on exactly n vertices up to isomorphism, by
// vertex augmentation with canonical-form dedup. n <= 8.
std::vector<Graph> generate_corpus(int n, bool connected_only);

// |Aut(F_k(G))| equals |Aut(G)| (doubled at k = n/2), and every automorphism
// of F_k(G) decomposes as a lift or a complement-composed lift.
bool verify_unique_reconstructibility(const Graph& g, int k, int enum_bound = 64);

// build_token_graph(j, k) isomorphic to f; k inferred from |V(f)| = C(n,k)
// when absent.
bool verify_reconstruction(const Graph& f, const Graph& j, std::optional<int> k);

// (P1): any vertex adjacent to two non-consecutive vertices of an induced
// 4-cycle is adjacent to all four.
bool verify_p1_property(const TokenGraph& tg);

}  // namespace tokengraph

#endif
