#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tokengraph/corpus.hpp"
#include "tokengraph/iso.hpp"
#include "tokengraph/token_graph.hpp"

using namespace tokengraph;

TEST_CASE("token graph construction") {
    TokenGraph f2c4 = build_token_graph(cycle_graph(4), 2);
    CHECK(f2c4.graph.order() == 6);

    Graph g = petersen_graph();
    TokenGraph f1 = build_token_graph(g, 1);
    CHECK(isomorphic(f1.graph, g));

    // every edge's symmetric difference is a base edge
    TokenGraph f2 = build_token_graph(path_graph(5), 2);
    for (auto [a, b] : f2.graph.edges()) {
        std::uint64_t d = f2.subsets[a] ^ f2.subsets[b];
        auto verts = mask_to_vertices(d);
        REQUIRE(verts.size() == 2);
        CHECK(f2.base.adjacent(verts[0], verts[1]));
    }

    CHECK_THROWS_AS(build_token_graph(path_graph(3), 3), DomainError);
    CHECK_THROWS_AS(build_token_graph(path_graph(3), 0), DomainError);
    CHECK_THROWS_AS(build_token_graph(path_graph(50), 25), SizeError);
}

TEST_CASE("star token graph degrees split by parts") {
    TokenGraph f = build_token_graph(star_graph(3), 2);
    // V0 (no token at the center) has degree k, V1 degree n-k+1
    int k = 2, n = 3;
    for (int v = 0; v < f.graph.order(); ++v) {
        bool center = f.subsets[v] & 1;  // base vertex 0 is the center
        CHECK(f.graph.degree(v) == (center ? n - k + 1 : k));
    }
}

TEST_CASE("complement map") {
    Graph c4 = cycle_graph(4);
    TokenGraph f2 = build_token_graph(c4, 2);
    Isomorphism c = complement_map(f2, f2);
    CHECK(is_valid_isomorphism(f2.graph, f2.graph, c));
    // an involution, not the identity
    bool moved = false;
    for (int v = 0; v < f2.graph.order(); ++v) {
        CHECK(c.map[c.map[v]] == v);
        if (c.map[v] != v) moved = true;
    }
    CHECK(moved);

    TokenGraph f1p3 = build_token_graph(path_graph(3), 1);
    TokenGraph f2p3 = build_token_graph(path_graph(3), 2);
    Isomorphism c2 = complement_map(f1p3, f2p3);
    CHECK(is_valid_isomorphism(f1p3.graph, f2p3.graph, c2));
}

TEST_CASE("complement equals the lifted swap on one edge") {
    Graph k2 = complete_graph(2);
    TokenGraph f1 = build_token_graph(k2, 1);
    Isomorphism swap;
    swap.map = {1, 0};
    Isomorphism lifted = lift_isomorphism(f1, f1, swap);
    Isomorphism comp = complement_map(f1, f1);
    CHECK(lifted.map == comp.map);
}

TEST_CASE("lift respects identity and composition") {
    Graph g = path_graph(4);
    TokenGraph f2 = build_token_graph(g, 2);
    Isomorphism id;
    id.map = {0, 1, 2, 3};
    CHECK(lift_isomorphism(f2, f2, id).map == std::vector<int>{0, 1, 2, 3, 4, 5});

    Isomorphism rev;
    rev.map = {3, 2, 1, 0};
    auto l1 = lift_isomorphism(f2, f2, rev);
    // rev o rev = id
    Isomorphism comp;
    comp.map.resize(4);
    for (int v = 0; v < 4; ++v) comp.map[v] = rev.map[rev.map[v]];
    auto l2 = lift_isomorphism(f2, f2, comp);
    for (int v = 0; v < f2.graph.order(); ++v) CHECK(l2.map[v] == l1.map[l1.map[v]]);
}

TEST_CASE("lift is injective across distinct automorphisms") {
    for (const Graph& g : generate_corpus(5, true)) {
        TokenGraph f2 = build_token_graph(g, 2);
        auto autos = enumerate_isomorphisms(g, g);
        std::set<std::vector<int>> lifts;
        for (const auto& a : autos) lifts.insert(lift_isomorphism(f2, f2, a).map);
        CHECK(lifts.size() == autos.size());
    }
}

TEST_CASE("kappa sets") {
    TokenGraph f2c4 = build_token_graph(cycle_graph(4), 2);
    for (int u = 0; u < 4; ++u) CHECK(kappa(f2c4, u).members.size() == 3);

    TokenGraph f3 = build_token_graph(complete_graph(6), 3);
    auto ka = kappa(f3, 0), kb = kappa(f3, 1);
    std::vector<int> inter;
    std::set_intersection(ka.members.begin(), ka.members.end(), kb.members.begin(), kb.members.end(),
                          std::back_inserter(inter));
    CHECK(inter.size() == binomial(4, 1));  // C(n-2, k-2)

    TokenGraph f1 = build_token_graph(path_graph(4), 1);
    CHECK(kappa(f1, 2).members == std::vector<int>{2});
}

TEST_CASE("reconstruction family: the C4 example") {
    // C4 as the cycle (1,2,3,4), zero-based (0,1,2,3). A 2-token family that
    // is not the plain kappa family; its derived graph is again a 4-cycle.
    Graph c4 = cycle_graph(4);
    TokenGraph f = build_token_graph(c4, 2);
    auto pairset = [&](int a, int b) { return f.index((1ull << a) | (1ull << b)); };
    std::vector<std::vector<int>> family = {
        {pairset(1, 2), pairset(0, 2), pairset(0, 3)},
        {pairset(1, 2), pairset(0, 1), pairset(1, 3)},
        {pairset(0, 1), pairset(0, 2), pairset(2, 3)},
        {pairset(0, 3), pairset(1, 3), pairset(2, 3)},
    };
    for (auto& x : family) std::sort(x.begin(), x.end());
    CHECK(is_reconstruction_family(f.graph, family, 4, 2));
    FamilyGraph fg = family_to_graph(f.graph, family, 4, 2);
    CHECK(fg.g.order() == 4);
    CHECK(isomorphic(fg.g, c4));
    TokenGraph check = build_token_graph(fg.g, 2);
    CHECK(isomorphic(check.graph, f.graph));
}

TEST_CASE("kappa family is a reconstruction family and rebuilds the base") {
    Graph p4 = path_graph(4);
    TokenGraph f = build_token_graph(p4, 2);
    std::vector<std::vector<int>> family;
    for (int u = 0; u < 4; ++u) family.push_back(kappa(f, u).members);
    CHECK(is_reconstruction_family(f.graph, family, 4, 2));
    FamilyGraph fg = family_to_graph(f.graph, family, 4, 2);
    CHECK(isomorphic(fg.g, p4));
}

TEST_CASE("complement family is valid when k = n/2") {
    Graph p4 = path_graph(4);
    TokenGraph f = build_token_graph(p4, 2);
    std::vector<std::vector<int>> family;
    for (int u = 0; u < 4; ++u) {
        auto members = kappa(f, u).members;
        std::vector<char> in(f.graph.order(), 0);
        for (int m : members) in[m] = 1;
        std::vector<int> comp;
        for (int v = 0; v < f.graph.order(); ++v)
            if (!in[v]) comp.push_back(v);
        family.push_back(comp);
    }
    CHECK(is_reconstruction_family(f.graph, family, 4, 2));
}

TEST_CASE("size violations are rejected") {
    Graph p4 = path_graph(4);
    TokenGraph f = build_token_graph(p4, 2);
    std::vector<std::vector<int>> family;
    for (int u = 0; u < 4; ++u) family.push_back(kappa(f, u).members);
    family[0].pop_back();
    CHECK_FALSE(is_reconstruction_family(f.graph, family, 4, 2));
    CHECK_THROWS_AS(family_to_graph(f.graph, family, 4, 2), DomainError);
}

TEST_CASE("edge count symmetry via the complement map") {
    for (int n = 4; n <= 6; ++n) {
        for (const Graph& g : generate_corpus(n, true)) {
            for (int k = 1; k <= n - 1; ++k) {
                TokenGraph a = build_token_graph(g, k);
                TokenGraph b = build_token_graph(g, n - k);
                Isomorphism c = complement_map(a, b);
                CHECK(is_valid_isomorphism(a.graph, b.graph, c));
            }
        }
    }
}

TEST_CASE("connectivity transfers between the base and the token graph") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : generate_corpus(n, false)) {
            for (int k = 1; k <= n - 1; ++k) {
                TokenGraph f = build_token_graph(g, k);
                CHECK(is_connected(f.graph) == is_connected(g));
            }
        }
    }
}
