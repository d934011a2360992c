#ifndef TOKENGRAPH_MATCHING_HPP
#define TOKENGRAPH_MATCHING_HPP

#include <vector>

#include "tokengraph/graph.hpp"

namespace tokengraph {

using Matching = std::vector<Edge>;

// Exact maximum-cardinality matching by vertex branching, guarded by an edge
// count bound: the local views this library matches never exceed it.
int matching_number(const Graph& g, int max_edges = 24);

// A maximum matching; among all maximum matchings, the lexicographically
// smallest edge set (edges sorted).
Matching maximum_matching(const Graph& g, int max_edges = 24);

}  // namespace tokengraph

#endif
