#ifndef TOKENGRAPH_STAR_HPP
#define TOKENGRAPH_STAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tokengraph/graph.hpp"

namespace tokengraph {

// Candidate parameters for f = F_k(K_{1,n}); k <= (n+1)/2 by normalization.
struct StarParameters {
    int n = 0;
    int k = 0;
    friend bool operator==(const StarParameters&, const StarParameters&) = default;
};

// A labeling of f as a token graph of the star with center x_0 and leaves
// x_1..x_n. leaves[v] is the bitmask of leaf tokens (bit i-1 for x_i);
// has_center[v] says whether a token sits on x_0. The labeling is a graph
// isomorphism onto F_k(K_{1,n}).
struct StarLabeling {
    std::vector<std::uint64_t> leaves;
    std::vector<char> has_center;
};

// A seed for the forced extension: labels for one vertex v*, its k
// neighbors, and the other n-k neighbors of the first of them.
struct StarSeed {
    std::vector<std::pair<int, std::uint64_t>> w0;  // (vertex, leaf mask of size k), first is v*
    std::vector<std::pair<int, std::uint64_t>> w1;  // (vertex, leaf mask of size k-1), first is w_1
};

std::optional<StarParameters> star_parameters(const Graph& f);

// Extends the seed to the unique full labeling or reports that none exists.
// Throws DomainError if the seed is malformed.
std::optional<StarLabeling> extend_labeling(const Graph& f, const StarParameters& p, const StarSeed& seed);

std::optional<std::pair<StarParameters, StarLabeling>> recognize_star_token(const Graph& f);

// |Iso(f, F_k(K_{1,n}))| by enumerating all seeds; n! when k != (n+1)/2 and
// 2*n! otherwise. Throws DomainError if f is not such a token graph.
long count_star_isomorphisms(const Graph& f, const StarParameters& p);

}  // namespace tokengraph

#endif
