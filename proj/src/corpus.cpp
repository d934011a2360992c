#include "tokengraph/corpus.hpp"

#include <algorithm>
#include <set>

#include "tokengraph/iso.hpp"
#include "tokengraph/ladders.hpp"

namespace tokengraph {

std::vector<Graph> generate_corpus(int n, bool connected_only) {
    if (n < 1) throw DomainError("corpus needs n >= 1");
    if (n > 8) throw SizeError("corpus generation limited to n <= 8");
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (std::uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < m - 1; ++v)
                    if (nb >> v & 1) h.add_edge(v, m - 1);
                if (!is_c4_diamond_free(h)) continue;
                auto form = canonical_graph6(h);
                if (seen.insert(form).second) next.push_back(parse_graph6(form));
            }
        }
        level = std::move(next);
    }
    if (connected_only) {
        std::vector<Graph> out;
        for (auto& g : level)
            if (is_connected(g)) out.push_back(std::move(g));
        return out;
    }
    return level;
}

bool verify_unique_reconstructibility(const Graph& g, int k, int enum_bound) {
    int n = g.order();
    if (n < 3) throw DomainError("needs at least 3 vertices");
    if (!is_connected(g)) throw DomainError("needs a connected graph");
    TokenGraph tg = build_token_graph(g, k);
    auto aut_f = enumerate_isomorphisms(tg.graph, tg.graph, enum_bound);
    auto aut_g = enumerate_isomorphisms(g, g, enum_bound);
    std::size_t expected = aut_g.size() * (2 * k == n ? 2 : 1);
    if (aut_f.size() != expected) return false;
    // condition 3: Aut(F) = iota(Aut(G)) plus, when k = n/2, its complement
    // composites
    std::set<std::vector<int>> want;
    for (const auto& a : aut_g) {
        Isomorphism lift = lift_isomorphism(tg, tg, a);
        want.insert(lift.map);
        if (2 * k == n) {
            TokenGraph co = build_token_graph(g, n - k);
            Isomorphism comp = complement_map(tg, co);
            // c∘iota(a): co and tg share the same abstract graph when k=n/2
            std::vector<int> m(lift.map.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = comp.map[lift.map[i]];
            want.insert(std::move(m));
        }
    }
    std::set<std::vector<int>> have;
    for (const auto& a : aut_f) have.insert(a.map);
    return want == have;
}

bool verify_reconstruction(const Graph& f, const Graph& j, std::optional<int> k) {
    long vf = f.order();
    std::vector<std::pair<int, int>> candidates;
    if (k) {
        if (*k < 1) throw DomainError("k must be positive");
        for (int n = *k + 1; n <= 64; ++n) {
            std::uint64_t c;
            try {
                c = binomial(n, *k);
            } catch (const SizeError&) {
                break;
            }
            if (c == static_cast<std::uint64_t>(vf)) candidates.emplace_back(n, *k);
            if (c > static_cast<std::uint64_t>(vf)) break;
        }
    } else {
        for (int n = 1; n <= 64 && n <= vf; ++n)
            for (int kk = 1; kk <= n - 1; ++kk)
                if (binomial(n, kk) == static_cast<std::uint64_t>(vf)) candidates.emplace_back(n, kk);
    }
    if (candidates.empty()) throw DomainError("no (n,k) fits |V(f)|");
    for (auto [n, kk] : candidates) {
        if (j.order() != n) continue;
        TokenGraph t = build_token_graph(j, kk);
        if (isomorphic(t.graph, f)) return true;
    }
    return false;
}

bool verify_p1_property(const TokenGraph& tg) {
    const Graph& f = tg.graph;
    auto cycles = induced_4cycles(f);
    for (const auto& cyc : cycles) {
        auto [a, b, c, d] = cyc;
        for (int x = 0; x < f.order(); ++x) {
            if (x == a || x == b || x == c || x == d) continue;
            bool diag1 = f.adjacent(x, a) && f.adjacent(x, c);
            bool diag2 = f.adjacent(x, b) && f.adjacent(x, d);
            if (diag1 || diag2)
                if (!(f.adjacent(x, a) && f.adjacent(x, b) && f.adjacent(x, c) && f.adjacent(x, d))) return false;
        }
    }
    return true;
}

}  // namespace tokengraph
