#include "tokengraph/token_graph.hpp"

#include <algorithm>

#include "tokengraph/iso.hpp"

namespace tokengraph {

TokenGraph build_token_graph(const Graph& g, int k) {
    int n = g.order();
    if (k < 1 || k > n - 1) throw DomainError("token count must satisfy 1 <= k <= n-1");
    std::uint64_t count = binomial(n, k);
    if (count > (1u << 20)) throw SizeError("token graph too large");
    TokenGraph tg;
    tg.base = g;
    tg.k = k;
    tg.subsets = k_subsets(n, k);
    tg.index_of.reserve(tg.subsets.size() * 2);
    for (std::size_t i = 0; i < tg.subsets.size(); ++i) tg.index_of.emplace(tg.subsets[i], static_cast<int>(i));
    tg.graph = Graph(static_cast<int>(tg.subsets.size()));
    for (std::size_t i = 0; i < tg.subsets.size(); ++i) {
        std::uint64_t a = tg.subsets[i];
        for (int u : mask_to_vertices(a)) {
            for (int v : g.neighbors(u)) {
                if (a >> v & 1) continue;  // occupied
                std::uint64_t b = (a ^ (1ull << u)) | (1ull << v);
                if (b > a) tg.graph.add_edge(static_cast<int>(i), tg.index_of.at(b));
            }
        }
    }
    return tg;
}

Isomorphism complement_map(const TokenGraph& src, const TokenGraph& dst) {
    int n = src.base.order();
    if (dst.base.order() != n || dst.k != n - src.k) throw DomainError("complement_map: token counts must sum to n");
    if (!(src.base == dst.base)) throw DomainError("complement_map: different base graphs");
    std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    Isomorphism f;
    f.map.reserve(src.subsets.size());
    for (std::uint64_t a : src.subsets) f.map.push_back(dst.index(full ^ a));
    return f;
}

Isomorphism lift_isomorphism(const TokenGraph& src, const TokenGraph& dst, const Isomorphism& base_iso) {
    if (src.k != dst.k) throw DomainError("lift_isomorphism: token counts differ");
    if (!is_valid_isomorphism(src.base, dst.base, base_iso)) throw DomainError("lift_isomorphism: invalid base isomorphism");
    Isomorphism f;
    f.map.reserve(src.subsets.size());
    for (std::uint64_t a : src.subsets) {
        std::uint64_t b = 0;
        for (int v : mask_to_vertices(a)) b |= 1ull << base_iso(v);
        f.map.push_back(dst.index(b));
    }
    return f;
}

KappaSet kappa(const TokenGraph& tg, int u) {
    if (u < 0 || u >= tg.base.order()) throw DomainError("kappa: vertex out of range");
    KappaSet out;
    out.pivot = u;
    for (std::size_t i = 0; i < tg.subsets.size(); ++i)
        if (tg.subsets[i] >> u & 1) out.members.push_back(static_cast<int>(i));
    return out;
}

namespace {

std::vector<std::vector<int>> stab_map(const Graph& f, const std::vector<std::vector<int>>& family) {
    std::vector<std::vector<int>> stabs(f.order());
    for (std::size_t x = 0; x < family.size(); ++x)
        for (int a : family[x]) {
            if (a < 0 || a >= f.order()) throw DomainError("family member contains an invalid vertex");
            stabs[a].push_back(static_cast<int>(x));
        }
    return stabs;
}

}  // namespace

bool is_reconstruction_family(const Graph& f, const std::vector<std::vector<int>>& family, int n, int k) {
    if (static_cast<std::uint64_t>(f.order()) != binomial(n, k)) throw DomainError("|V(f)| must equal C(n,k)");
    std::uint64_t want = binomial(n - 1, k - 1);
    for (const auto& x : family)
        if (x.size() != want) return false;
    auto stabs = stab_map(f, family);
    for (const auto& s : stabs)
        if (static_cast<int>(s.size()) != k) return false;
    for (auto [a, b] : f.edges()) {
        std::vector<int> inter;
        std::set_intersection(stabs[a].begin(), stabs[a].end(), stabs[b].begin(), stabs[b].end(),
                              std::back_inserter(inter));
        if (static_cast<int>(inter.size()) != k - 1) return false;
    }
    return true;
}

FamilyGraph family_to_graph(const Graph& f, const std::vector<std::vector<int>>& family, int n, int k) {
    if (!is_reconstruction_family(f, family, n, k)) throw DomainError("not a k-reconstruction family");
    FamilyGraph out;
    out.stabs = stab_map(f, family);
    out.g = Graph(static_cast<int>(family.size()));
    for (auto [a, b] : f.edges()) {
        std::vector<int> diff;
        std::set_symmetric_difference(out.stabs[a].begin(), out.stabs[a].end(), out.stabs[b].begin(),
                                      out.stabs[b].end(), std::back_inserter(diff));
        if (diff.size() != 2) throw DomainError("family violates the edge-stab property");
        if (!out.g.adjacent(diff[0], diff[1])) out.g.add_edge(diff[0], diff[1]);
    }
    // the stab map must be an isomorphism onto F_k(G_R)
    TokenGraph check = build_token_graph(out.g, k);
    Isomorphism s;
    s.map.reserve(f.order());
    for (int a = 0; a < f.order(); ++a) {
        std::uint64_t mask = 0;
        for (int x : out.stabs[a]) mask |= 1ull << x;
        s.map.push_back(check.index(mask));
    }
    if (!is_valid_isomorphism(f, check.graph, s)) throw DomainError("stab map is not a token-graph isomorphism");
    return out;
}

}  // namespace tokengraph
