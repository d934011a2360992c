#ifndef TOKENGRAPH_CARTESIAN_HPP
#define TOKENGRAPH_CARTESIAN_HPP

#include <vector>

#include "tokengraph/graph.hpp"

namespace tokengraph {

struct CartesianFactorization {
    std::vector<Graph> factors;                // prime, nontrivial
    std::vector<std::vector<int>> coordinates;  // per vertex: one coordinate per factor
};

// Prime factorization of a connected graph w.r.t. the Cartesian product,
// via the product relation (transitive closure of Djokovic-Winkler plus the
// incident-no-chordless-square relation), recursing on the factors.
CartesianFactorization cartesian_factorize(const Graph& g);

struct DisconnectedReconstruction {
    std::vector<Graph> nontrivial_components;
    int isolated_count = 0;
};

// Reconstruction of a disconnected (C4,diamond)-free base from F ~ F_k(G),
// |G| = n, k <= n/2.
DisconnectedReconstruction reconstruct_disconnected(const Graph& f, int n, int k);

struct CollisionPair {
    Graph g1;
    int k1 = 0;
    Graph g2;
    int k2 = 0;
};

// Exhaustive search for disconnected (C4,diamond)-free G1 !~ G2 with
// F_{k1}(G1) ~ F_{k2}(G2) and k1 != k2, over bases with at most max_n
// vertices and k <= n/2. Candidate pairs are tested in parallel across
// jobs threads; the result order is deterministic.
std::vector<CollisionPair> search_distinct_k_collision(int max_n, int jobs = 1);

}  // namespace tokengraph

#endif
