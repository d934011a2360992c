#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tokengraph/cartesian.hpp"
#include "tokengraph/corpus.hpp"
#include "tokengraph/iso.hpp"
#include "tokengraph/token_graph.hpp"

using namespace tokengraph;

namespace {

Graph rebuild_from_factorization(const CartesianFactorization& cf) {
    Graph prod = cf.factors.empty() ? Graph(1) : cf.factors[0];
    for (std::size_t i = 1; i < cf.factors.size(); ++i) prod = cartesian_product(prod, cf.factors[i]);
    return prod;
}

}  // namespace

TEST_CASE("hypercube factors into edges") {
    CartesianFactorization cf = cartesian_factorize(hypercube(3));
    CHECK(cf.factors.size() == 3);
    for (const Graph& f : cf.factors) {
        CHECK(f.order() == 2);
        CHECK(f.num_edges() == 1);
    }
}

TEST_CASE("K3 box K2") {
    Graph g = cartesian_product(complete_graph(3), complete_graph(2));
    CartesianFactorization cf = cartesian_factorize(g);
    REQUIRE(cf.factors.size() == 2);
    std::multiset<int> sizes{cf.factors[0].order(), cf.factors[1].order()};
    CHECK(sizes == std::multiset<int>{2, 3});
    CHECK(isomorphic(rebuild_from_factorization(cf), g));
}

TEST_CASE("token graphs of connected bases are prime") {
    CartesianFactorization cf = cartesian_factorize(build_token_graph(path_graph(5), 2).graph);
    CHECK(cf.factors.size() == 1);
    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : generate_corpus(n, true))
            for (int k = 1; k <= n - 1; ++k)
                CHECK(cartesian_factorize(build_token_graph(g, k).graph).factors.size() == 1);
}

TEST_CASE("factorization coordinates rebuild the product") {
    std::vector<Graph> samples = {
        cartesian_product(path_graph(3), path_graph(3)),
        cartesian_product(complete_graph(3), path_graph(2)),
        cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)), path_graph(3)),
        petersen_graph(),
        path_graph(7),
        cycle_graph(6),
        cartesian_product(cycle_graph(5), complete_graph(2)),
    };
    for (const Graph& g : samples) {
        CartesianFactorization cf = cartesian_factorize(g);
        Graph prod = rebuild_from_factorization(cf);
        CHECK(isomorphic(prod, g));
        // coordinates are a bijection onto the product tuples and edges move
        // one coordinate along a factor edge
        std::set<std::vector<int>> seen;
        for (const auto& t : cf.coordinates) CHECK(seen.insert(t).second);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                int diff = -1;
                bool unit = true;
                for (std::size_t c = 0; c < cf.factors.size() && unit; ++c) {
                    if (cf.coordinates[u][c] == cf.coordinates[v][c]) continue;
                    if (diff >= 0) unit = false;
                    else diff = static_cast<int>(c);
                }
                bool pa = unit && diff >= 0 &&
                          cf.factors[diff].adjacent(cf.coordinates[u][diff], cf.coordinates[v][diff]);
                CHECK(pa == g.adjacent(u, v));
            }
    }
    CHECK_THROWS_AS(cartesian_factorize(disjoint_union(complete_graph(2), complete_graph(2))), DomainError);
}

namespace {

std::multiset<std::string> component_forms(const std::vector<Graph>& comps) {
    std::multiset<std::string> out;
    for (const Graph& c : comps) out.insert(canonical_graph6(c));
    return out;
}

std::pair<std::multiset<std::string>, int> true_split(const Graph& g) {
    std::multiset<std::string> nontrivial;
    int isolated = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1)
            ++isolated;
        else
            nontrivial.insert(canonical_graph6(induced_subgraph(g, comp)));
    }
    return {nontrivial, isolated};
}

}  // namespace

TEST_CASE("disconnected reconstruction on the named instances") {
    // F_2(K3 u K2): components are two tokens on K3, one on each, two on K2
    Graph g = disjoint_union(complete_graph(3), complete_graph(2));
    TokenGraph f = build_token_graph(g, 2);
    DisconnectedReconstruction rec = reconstruct_disconnected(f.graph, 5, 2);
    auto [want, isolated] = true_split(g);
    CHECK(component_forms(rec.nontrivial_components) == want);
    CHECK(isolated == 0);
    CHECK(rec.isolated_count == isolated);

    // F_2(K2 u K2 u K1): the r* = k counting branch
    Graph g2 = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)), Graph(1));
    TokenGraph f2 = build_token_graph(g2, 2);
    DisconnectedReconstruction rec2 = reconstruct_disconnected(f2.graph, 5, 2);
    auto [want2, isolated2] = true_split(g2);
    CHECK(component_forms(rec2.nontrivial_components) == want2);
    CHECK(isolated2 == 1);
    CHECK(rec2.isolated_count == isolated2);

    // F_1(anything) is the graph itself
    Graph g3 = disjoint_union(path_graph(3), Graph(2));
    DisconnectedReconstruction rec3 = reconstruct_disconnected(g3, 5, 1);
    auto [want3, isolated3] = true_split(g3);
    CHECK(component_forms(rec3.nontrivial_components) == want3);
    CHECK(isolated3 == 2);
    CHECK(rec3.isolated_count == isolated3);

    CHECK_THROWS_AS(reconstruct_disconnected(f.graph, 6, 2), DomainError);
    CHECK_THROWS_AS(reconstruct_disconnected(f.graph, 5, 3), DomainError);
}

TEST_CASE("disconnected round trip across the corpus at n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : generate_corpus(n, false)) {
            if (is_connected(g)) continue;
            auto [want, isolated] = true_split(g);
            for (int k = 1; 2 * k <= n; ++k) {
                TokenGraph f = build_token_graph(g, k);
                DisconnectedReconstruction rec = reconstruct_disconnected(f.graph, n, k);
                CAPTURE(emit_graph6(g));
                CAPTURE(k);
                CHECK(component_forms(rec.nontrivial_components) == want);
                CHECK(rec.isolated_count == isolated);
            }
        }
    }
}

TEST_CASE("collision search output is sound") {
    auto pairs = search_distinct_k_collision(4);
    for (const CollisionPair& p : pairs) {
        CHECK(p.k1 != p.k2);
        CHECK(is_c4_diamond_free(p.g1));
        CHECK(is_c4_diamond_free(p.g2));
        CHECK_FALSE(is_connected(p.g1));
        CHECK_FALSE(is_connected(p.g2));
        if (p.g1.order() == p.g2.order()) CHECK_FALSE(isomorphic(p.g1, p.g2));
        TokenGraph t1 = build_token_graph(p.g1, p.k1);
        TokenGraph t2 = build_token_graph(p.g2, p.k2);
        CHECK(isomorphic(t1.graph, t2.graph));
    }

    // at bound 6 the search finds genuine cross-k collisions, e.g.
    // F_1(2K2 u 2K1) = 2K2 u 2K1 = F_2(K2 u 2K1)
    auto pairs6 = search_distinct_k_collision(6);
    CHECK(!pairs6.empty());
    for (const CollisionPair& p : pairs6) {
        TokenGraph t1 = build_token_graph(p.g1, p.k1);
        TokenGraph t2 = build_token_graph(p.g2, p.k2);
        CHECK(isomorphic(t1.graph, t2.graph));
    }
}
