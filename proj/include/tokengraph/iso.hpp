#ifndef TOKENGRAPH_ISO_HPP
#define TOKENGRAPH_ISO_HPP

#include <optional>
#include <string>
#include <vector>

#include "tokengraph/graph.hpp"

namespace tokengraph {

// Degree-refined backtracking. Deterministic for fixed inputs.
std::optional<Isomorphism> find_isomorphism(const Graph& g, const Graph& h);

inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// All isomorphisms g -> h, exhaustively. Guarded by max_order.
std::vector<Isomorphism> enumerate_isomorphisms(const Graph& g, const Graph& h, int max_order = 40);

// Exact |Aut(g)| by backtracking enumeration. Guarded by max_order.
long automorphism_count(const Graph& g, int max_order = 16);

// Lexicographically smallest graph6 string over all vertex orderings; the
// colex bit order of graph6 makes this a branch-and-bound over prefixes.
std::string canonical_graph6(const Graph& g);

}  // namespace tokengraph

#endif
