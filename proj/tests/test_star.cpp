#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tokengraph/corpus.hpp"
#include "tokengraph/iso.hpp"
#include "tokengraph/star.hpp"
#include "tokengraph/token_graph.hpp"

using namespace tokengraph;

TEST_CASE("star parameters") {
    TokenGraph f = build_token_graph(star_graph(4), 2);
    auto p = star_parameters(f.graph);
    REQUIRE(p.has_value());
    CHECK(p->n == 4);
    CHECK(p->k == 2);

    CHECK_FALSE(star_parameters(complete_graph(3)).has_value());
    CHECK_FALSE(star_parameters(disjoint_union(complete_graph(2), complete_graph(2))).has_value());

    // C6 = F_2(K_{1,3}) is a genuine star token graph
    auto pc6 = star_parameters(cycle_graph(6));
    REQUIRE(pc6.has_value());
    CHECK(pc6->n == 3);
    CHECK(pc6->k == 2);
    CHECK(recognize_star_token(cycle_graph(6)).has_value());

    // C8 has star-like degrees but is no star token graph
    CHECK_FALSE(recognize_star_token(cycle_graph(8)).has_value());
}

TEST_CASE("recognition across constructed star token graphs") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; 2 * k <= n + 1; ++k) {
            TokenGraph f = build_token_graph(star_graph(n), k);
            auto rec = recognize_star_token(f.graph);
            REQUIRE(rec.has_value());
            CHECK(rec->first.n == n);
            CHECK(rec->first.k == std::min(k, n + 1 - k));
        }
    }
    CHECK_FALSE(recognize_star_token(build_token_graph(cycle_graph(5), 2).graph).has_value());
    CHECK_FALSE(recognize_star_token(build_token_graph(path_graph(4), 2).graph).has_value());
}

TEST_CASE("labelings are isomorphisms onto the star token graph") {
    TokenGraph f = build_token_graph(star_graph(5), 3);
    auto rec = recognize_star_token(f.graph);
    REQUIRE(rec.has_value());
    const StarLabeling& lab = rec->second;
    // translate the labels into configurations of K_{1,5} with center 0 and
    // leaves 1..5, then check edge preservation directly
    const Graph& fg = f.graph;
    for (auto [u, v] : fg.edges()) {
        CHECK(lab.has_center[u] != lab.has_center[v]);
        int c = lab.has_center[u] ? u : v;
        int o = lab.has_center[u] ? v : u;
        CHECK((lab.leaves[c] & lab.leaves[o]) == lab.leaves[c]);
    }
}

TEST_CASE("a degree-preserving corruption is rejected") {
    TokenGraph f = build_token_graph(star_graph(4), 2);
    Graph g = f.graph;
    // find vertices a,b,c,d with edges ab, cd, no ac/bd, and rewire to ac,
    // bd; degrees stay intact but the structure breaks
    bool done = false;
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size() && !done; ++i)
        for (std::size_t j = i + 1; j < edges.size() && !done; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.adjacent(a, c) || g.adjacent(b, d)) continue;
            g.remove_edge(a, b);
            g.remove_edge(c, d);
            g.add_edge(a, c);
            g.add_edge(b, d);
            done = true;
        }
    REQUIRE(done);
    CHECK_FALSE(recognize_star_token(g).has_value());
}

TEST_CASE("isomorphism counts match the brute-force enumeration") {
    // n!, doubled when k = (n+1)/2
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; 2 * k <= n + 1; ++k) {
            TokenGraph f = build_token_graph(star_graph(n), k);
            StarParameters p{n, std::min(k, n + 1 - k)};
            long got = count_star_isomorphisms(f.graph, p);
            long fact = 1;
            for (int t = 2; t <= n; ++t) fact *= t;
            CHECK(got == (2 * p.k == n + 1 ? 2 * fact : fact));
            if (f.graph.order() <= 8)
                CHECK(got == oracle::iso_count_by_permutations(f.graph, f.graph));
        }
    }
    CHECK(count_star_isomorphisms(build_token_graph(star_graph(4), 2).graph, StarParameters{4, 2}) == 24);
    CHECK(count_star_isomorphisms(build_token_graph(star_graph(3), 2).graph, StarParameters{3, 2}) == 12);
    CHECK(count_star_isomorphisms(build_token_graph(star_graph(2), 1).graph, StarParameters{2, 1}) == 2);
    CHECK_THROWS_AS(count_star_isomorphisms(cycle_graph(8), StarParameters{8, 1}), DomainError);
}

TEST_CASE("recognition agrees with brute-force isomorphism testing") {
    // bipartite biregular candidates from the corpus versus direct testing
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : generate_corpus(n, true)) {
            auto p = star_parameters(g);
            if (!p) continue;
            TokenGraph ref = build_token_graph(star_graph(p->n), p->k);
            bool truth = g.order() == ref.graph.order() && isomorphic(g, ref.graph);
            CHECK(recognize_star_token(g).has_value() == truth);
        }
    }
}

TEST_CASE("seed validation rejects malformed seeds") {
    TokenGraph f = build_token_graph(star_graph(4), 2);
    StarParameters p{4, 2};
    StarSeed bad;
    bad.w0.emplace_back(0, 0b11);
    CHECK_THROWS_AS(extend_labeling(f.graph, p, bad), DomainError);
}
