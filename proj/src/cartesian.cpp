#include "tokengraph/cartesian.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <queue>
#include <set>
#include <thread>

#include "tokengraph/corpus.hpp"
#include "tokengraph/iso.hpp"
#include "tokengraph/reconstruct.hpp"
#include "tokengraph/subsets.hpp"
#include "tokengraph/token_graph.hpp"

namespace tokengraph {

namespace {

std::vector<std::vector<int>> all_distances(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        d[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (d[s][v] < 0) {
                    d[s][v] = d[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

// Edge classes of the product relation: Djokovic-Winkler theta united with
// "incident edges that span no chordless square".
std::vector<int> product_edge_classes(const Graph& g, const std::vector<Edge>& edges, int& class_count) {
    auto dist = all_distances(g);
    int m = static_cast<int>(edges.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto [x, y] = edges[i];
            auto [u, v] = edges[j];
            if (dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]) {
                uf.unite(i, j);
                continue;
            }
            // shared endpoint: same class unless some chordless square
            // contains both edges
            int shared = -1, a = -1, b = -1;
            if (x == u) shared = x, a = y, b = v;
            else if (x == v) shared = x, a = y, b = u;
            else if (y == u) shared = y, a = x, b = v;
            else if (y == v) shared = y, a = x, b = u;
            if (shared < 0) continue;
            if (g.adjacent(a, b)) {
                uf.unite(i, j);
                continue;
            }
            bool square = false;
            for (int z = 0; z < g.order() && !square; ++z)
                if (z != shared && g.adjacent(z, a) && g.adjacent(z, b) && !g.adjacent(z, shared)) square = true;
            if (!square) uf.unite(i, j);
        }
    }
    std::vector<int> cls(m, -1);
    class_count = 0;
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        if (cls[r] < 0) cls[r] = class_count++;
        cls[i] = cls[r];
    }
    return cls;
}

std::vector<int> components_of_subgraph(const Graph& g, const std::vector<Edge>& edges,
                                        const std::vector<char>& keep, int& comp_count) {
    int n = g.order();
    UnionFind uf(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (keep[i]) uf.unite(edges[i].u, edges[i].v);
    std::vector<int> comp(n, -1);
    comp_count = 0;
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (comp[r] < 0) comp[r] = comp_count++;
        comp[v] = comp[r];
    }
    return comp;
}

// Split g into layer graphs along the given edge classes; empty result means
// the classes do not induce a valid product (callers treat g as prime).
bool split_once(const Graph& g, CartesianFactorization& out) {
    auto edges = g.edges();
    int cc = 0;
    auto cls = product_edge_classes(g, edges, cc);
    if (cc <= 1) return false;
    int n = g.order();
    std::vector<std::vector<int>> coord(n, std::vector<int>(cc, -1));
    std::vector<Graph> factors;
    for (int c = 0; c < cc; ++c) {
        std::vector<char> in_c(edges.size()), out_c(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            in_c[i] = cls[i] == c;
            out_c[i] = cls[i] != c;
        }
        int layers = 0, cocomps = 0;
        auto layer = components_of_subgraph(g, edges, in_c, layers);
        auto co = components_of_subgraph(g, edges, out_c, cocomps);
        // the layer of vertex 0 is the factor; a vertex's coordinate is the
        // unique vertex of that layer sharing its co-component
        std::vector<int> base;
        for (int v = 0; v < n; ++v)
            if (layer[v] == layer[0]) base.push_back(v);
        std::vector<int> of_co(cocomps, -1);
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (of_co[co[base[i]]] >= 0) return false;
            of_co[co[base[i]]] = static_cast<int>(i);
        }
        for (int v = 0; v < n; ++v) {
            int c2 = of_co[co[v]];
            if (c2 < 0) return false;
            coord[v][c] = c2;
        }
        Graph fac(static_cast<int>(base.size()));
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                if (g.adjacent(base[i], base[j])) fac.add_edge(static_cast<int>(i), static_cast<int>(j));
        factors.push_back(std::move(fac));
    }
    // validate the product structure exactly
    std::uint64_t total = 1;
    for (const auto& f : factors) {
        total *= static_cast<std::uint64_t>(f.order());
        if (total > static_cast<std::uint64_t>(n)) return false;
    }
    if (total != static_cast<std::uint64_t>(n)) return false;
    std::set<std::vector<int>> tuples;
    for (int v = 0; v < n; ++v)
        if (!tuples.insert(coord[v]).second) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int diff = -1;
            bool unit = true;
            for (int c = 0; c < cc && unit; ++c) {
                if (coord[u][c] == coord[v][c]) continue;
                if (diff >= 0) unit = false;
                else diff = c;
            }
            bool prod_adj = unit && diff >= 0 && factors[diff].adjacent(coord[u][diff], coord[v][diff]);
            if (prod_adj != g.adjacent(u, v)) return false;
        }
    out.factors = std::move(factors);
    out.coordinates = std::move(coord);
    return true;
}

}  // namespace

CartesianFactorization cartesian_factorize(const Graph& g) {
    if (!is_connected(g)) throw DomainError("cartesian_factorize needs a connected graph");
    int n = g.order();
    CartesianFactorization triv;
    triv.factors = {g};
    triv.coordinates.assign(n, std::vector<int>());
    for (int v = 0; v < n; ++v) triv.coordinates[v] = {v};
    if (n <= 2 || g.num_edges() == 0) return triv;
    CartesianFactorization split;
    if (!split_once(g, split)) return triv;
    // recurse: each factor may still be composite
    CartesianFactorization out;
    out.coordinates.assign(n, {});
    for (std::size_t c = 0; c < split.factors.size(); ++c) {
        CartesianFactorization sub = cartesian_factorize(split.factors[c]);
        for (int v = 0; v < n; ++v) {
            const auto& subco = sub.coordinates[split.coordinates[v][c]];
            out.coordinates[v].insert(out.coordinates[v].end(), subco.begin(), subco.end());
        }
        for (auto& f : sub.factors) out.factors.push_back(std::move(f));
    }
    return out;
}

DisconnectedReconstruction reconstruct_disconnected(const Graph& f, int n, int k) {
    if (k < 1 || 2 * k > n) throw DomainError("reconstruct_disconnected needs 1 <= k <= n/2");
    if (binomial(n, k) != static_cast<std::uint64_t>(f.order())) throw DomainError("|V(f)| != C(n,k)");
    DisconnectedReconstruction out;
    auto finish = [&](std::vector<Graph> comps) {
        int used = 0;
        for (const auto& c : comps) used += c.order();
        if (used > n) throw StructureError("disconnected reconstruction", "components exceed n vertices");
        std::sort(comps.begin(), comps.end(), [](const Graph& a, const Graph& b) {
            return canonical_graph6(a) < canonical_graph6(b);
        });
        out.nontrivial_components = std::move(comps);
        out.isolated_count = n - used;
        return out;
    };
    if (k == 1) {
        // F_1(G) = G
        std::vector<Graph> comps;
        for (const auto& c : connected_components(f))
            if (c.size() > 1) comps.push_back(induced_subgraph(f, c));
        return finish(std::move(comps));
    }

    auto comps = connected_components(f);
    std::vector<CartesianFactorization> facts;
    facts.reserve(comps.size());
    int rstar = 0;
    for (const auto& c : comps) {
        Graph cg = induced_subgraph(f, c);
        CartesianFactorization cf;
        if (cg.order() == 1) {
            // trivial component: zero nontrivial factors
        } else {
            cf = cartesian_factorize(cg);
        }
        rstar = std::max(rstar, static_cast<int>(cf.factors.size()));
        facts.push_back(std::move(cf));
    }
    if (rstar == 0) {
        // an edgeless token graph comes from an edgeless base
        if (f.num_edges() != 0) throw StructureError("disconnected reconstruction", "no component has an edge");
        return finish({});
    }

    std::vector<int> attaining;
    for (std::size_t i = 0; i < facts.size(); ++i)
        if (static_cast<int>(facts[i].factors.size()) == rstar) attaining.push_back(static_cast<int>(i));

    if (rstar == k && attaining.size() >= 2) {
        // counting branch: every attaining component is a product of k
        // one-token factors, each factor a copy of a nontrivial component
        std::uint64_t qf = attaining.size();
        int qg = -1;
        for (int q = k; q <= n; ++q)
            if (binomial(q, k) == qf) {
                qg = q;
                break;
            }
        if (qg < 0) throw StructureError("disconnected reconstruction", "component count is not a binomial C(q,k)");
        std::vector<Graph> reps;
        std::vector<long> tally;
        for (int idx : attaining) {
            for (const Graph& fac : facts[idx].factors) {
                bool matched = false;
                for (std::size_t r = 0; r < reps.size(); ++r)
                    if (fac.order() == reps[r].order() && isomorphic(fac, reps[r])) {
                        ++tally[r];
                        matched = true;
                        break;
                    }
                if (!matched) {
                    reps.push_back(fac);
                    tally.push_back(1);
                }
            }
        }
        std::uint64_t per = binomial(qg - 1, k - 1);
        std::vector<Graph> result;
        for (std::size_t r = 0; r < reps.size(); ++r) {
            if (tally[r] % static_cast<long>(per) != 0)
                throw StructureError("disconnected reconstruction", "factor tally is not divisible");
            for (long t = 0; t < tally[r] / static_cast<long>(per); ++t) result.push_back(reps[r]);
        }
        return finish(std::move(result));
    }

    // C* branch: a component attaining r* covers every nontrivial component
    // of G, one factor each (the remaining tokens sit on isolated vertices,
    // invisible in the product). Each factor is F_{k_i}(G_i) for an unknown
    // k_i; its base graph is either the pipeline output or, when the factor
    // could itself be a base, the factor. The token-graph check settles it.
    const CartesianFactorization& cf = facts[attaining.front()];
    std::vector<std::vector<Graph>> options(cf.factors.size());
    for (std::size_t i = 0; i < cf.factors.size(); ++i) {
        const Graph& fac = cf.factors[i];
        ReconstructionResult rr = reconstruct(fac);
        options[i].push_back(rr.j_forward);
        if (!isomorphic(rr.j_forward, fac) && is_c4_diamond_free(fac)) options[i].push_back(fac);
    }
    std::vector<int> choice(options.size(), 0);
    std::vector<Graph> best;
    bool found = false;
    auto try_choice = [&]() {
        long vsum = 0;
        for (std::size_t i = 0; i < options.size(); ++i) vsum += options[i][choice[i]].order();
        if (vsum > n) return;
        Graph cand(n);
        int off = 0;
        for (std::size_t i = 0; i < options.size(); ++i) {
            for (auto [u, v] : options[i][choice[i]].edges()) cand.add_edge(off + u, off + v);
            off += options[i][choice[i]].order();
        }
        TokenGraph check = build_token_graph(cand, k);
        if (!isomorphic(check.graph, f)) return;
        best.clear();
        for (std::size_t i = 0; i < options.size(); ++i) best.push_back(options[i][choice[i]]);
        found = true;
    };
    auto rec = [&](auto&& self, std::size_t at) -> void {
        if (found) return;
        if (at == options.size()) {
            try_choice();
            return;
        }
        for (std::size_t o = 0; o < options[at].size() && !found; ++o) {
            choice[at] = static_cast<int>(o);
            self(self, at + 1);
        }
    };
    rec(rec, 0);
    if (!found) throw StructureError("disconnected reconstruction", "no factor reading matches f");
    return finish(std::move(best));
}

std::vector<CollisionPair> search_distinct_k_collision(int max_n, int jobs) {
    if (max_n > 7) throw SizeError("collision search limited to max_n <= 7");
    struct Entry {
        Graph g;
        int k;
        Graph token;
        long edges;
    };
    std::vector<Entry> entries;
    for (int n = 2; n <= max_n; ++n) {
        for (const Graph& g : generate_corpus(n, false)) {
            if (is_connected(g)) continue;
            for (int k = 1; 2 * k <= n; ++k) {
                TokenGraph tg = build_token_graph(g, k);
                entries.push_back({g, k, tg.graph, tg.graph.num_edges()});
            }
        }
    }
    std::vector<std::vector<CollisionPair>> rows(entries.size());
    auto scan_row = [&](std::size_t i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const Entry &a = entries[i], &b = entries[j];
            if (a.k == b.k) continue;
            if (a.token.order() != b.token.order() || a.edges != b.edges) continue;
            if (a.g.order() == b.g.order() && isomorphic(a.g, b.g)) continue;
            if (isomorphic(a.token, b.token)) {
                CollisionPair p;
                if (a.k < b.k)
                    p = {a.g, a.k, b.g, b.k};
                else
                    p = {b.g, b.k, a.g, a.k};
                rows[i].push_back(std::move(p));
            }
        }
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) scan_row(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < entries.size(); i = next++) scan_row(i);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<CollisionPair> out;
    for (auto& row : rows)
        for (auto& p : row) out.push_back(std::move(p));
    return out;
}

}  // namespace tokengraph
