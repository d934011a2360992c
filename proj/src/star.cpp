#include "tokengraph/star.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

#include "tokengraph/subsets.hpp"

namespace tokengraph {

namespace {

struct Bipartition {
    std::vector<int> side;  // 0/1 per vertex
    bool ok = false;
};

Bipartition bipartition(const Graph& f) {
    Bipartition b;
    int n = f.order();
    b.side.assign(n, -1);
    if (n == 0) return b;
    b.side[0] = 0;
    std::queue<int> q;
    q.push(0);
    int seen = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : f.neighbors(u)) {
            if (b.side[v] < 0) {
                b.side[v] = 1 - b.side[u];
                ++seen;
                q.push(v);
            } else if (b.side[v] == b.side[u]) {
                return b;  // odd cycle
            }
        }
    }
    b.ok = (seen == n);  // star token graphs are connected
    return b;
}

}  // namespace

std::optional<StarParameters> star_parameters(const Graph& f) {
    auto bip = bipartition(f);
    if (!bip.ok) return std::nullopt;
    int n = f.order();
    long cnt[2] = {0, 0};
    int deg[2] = {-1, -1};
    for (int v = 0; v < n; ++v) {
        int s = bip.side[v];
        ++cnt[s];
        if (deg[s] < 0)
            deg[s] = f.degree(v);
        else if (deg[s] != f.degree(v))
            return std::nullopt;  // parts must be degree-uniform
    }
    if (cnt[0] == 0 || cnt[1] == 0 || deg[0] <= 0 || deg[1] <= 0) return std::nullopt;
    int lo = deg[0] <= deg[1] ? 0 : 1;
    int k = deg[lo];
    int sn = deg[1 - lo] + k - 1;
    if (sn < 2 || k < 1 || 2 * k > sn + 1) return std::nullopt;
    std::uint64_t w0 = binomial(sn, k), w1 = binomial(sn, k - 1);
    long c_lo = cnt[lo], c_hi = cnt[1 - lo];
    if (deg[0] == deg[1]) {
        // either orientation must fit; sizes coincide for k=(n+1)/2
        if (static_cast<std::uint64_t>(c_lo) != w0 || static_cast<std::uint64_t>(c_hi) != w1) return std::nullopt;
    } else {
        if (static_cast<std::uint64_t>(c_lo) != w0 || static_cast<std::uint64_t>(c_hi) != w1) return std::nullopt;
    }
    return StarParameters{sn, k};
}

std::optional<StarLabeling> extend_labeling(const Graph& f, const StarParameters& p, const StarSeed& seed) {
    int n = f.order();
    int sk = p.k, sn = p.n;
    std::uint64_t leafmask = (1ull << sn) - 1;

    // ---- seed validation ----
    if (seed.w0.empty() || seed.w1.empty()) throw DomainError("star seed: missing vertices");
    if (static_cast<int>(seed.w1.size()) != sk) throw DomainError("star seed: need k center-side labels");
    if (static_cast<int>(seed.w0.size()) != 1 + sn - sk) throw DomainError("star seed: need 1 + n-k leaf-side labels");
    int vstar = seed.w0[0].first;
    std::uint64_t s0 = seed.w0[0].second;
    if (std::popcount(s0) != sk || (s0 & ~leafmask)) throw DomainError("star seed: bad v* label");
    auto wnbrs = f.neighbors(vstar);
    if (static_cast<int>(wnbrs.size()) != sk) throw DomainError("star seed: v* has wrong degree");
    {
        std::vector<int> wverts;
        for (auto& [v, m] : seed.w1) wverts.push_back(v);
        auto sorted = wverts;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != wnbrs) throw DomainError("star seed: w vertices are not N(v*)");
        std::uint64_t seen = 0;
        for (auto& [v, m] : seed.w1) {
            if (std::popcount(m) != sk - 1 || (m & ~s0) || (m | s0) != s0) throw DomainError("star seed: w label not contained in v*");
            std::uint64_t removed = s0 ^ m;
            if (seen & removed) throw DomainError("star seed: duplicate w label");
            seen |= removed;
        }
    }
    int w1v = seed.w1[0].first;
    std::uint64_t w1m = seed.w1[0].second;
    {
        std::vector<int> vverts;
        for (std::size_t i = 1; i < seed.w0.size(); ++i) vverts.push_back(seed.w0[i].first);
        auto sorted = vverts;
        std::sort(sorted.begin(), sorted.end());
        auto expect = f.neighbors(w1v);
        expect.erase(std::remove(expect.begin(), expect.end(), vstar), expect.end());
        if (sorted != expect) throw DomainError("star seed: v vertices are not N(w_1) minus v*");
        std::uint64_t seen = 0;
        for (std::size_t i = 1; i < seed.w0.size(); ++i) {
            std::uint64_t m = seed.w0[i].second;
            if (std::popcount(m) != sk || (m & ~leafmask) || (m & w1m) != w1m) throw DomainError("star seed: bad v label");
            std::uint64_t added = m ^ w1m;
            if (std::popcount(added) != 1 || (added & s0) || (seen & added)) throw DomainError("star seed: bad v label");
            seen |= added;
        }
    }

    // ---- forced extension ----
    StarLabeling lab;
    lab.leaves.assign(n, 0);
    lab.has_center.assign(n, 0);
    std::vector<char> labeled(n, 0);
    auto assign = [&](int v, std::uint64_t m, bool center) {
        if (labeled[v]) return lab.leaves[v] == m && lab.has_center[v] == static_cast<char>(center);
        labeled[v] = 1;
        lab.leaves[v] = m;
        lab.has_center[v] = center;
        return true;
    };
    for (auto& [v, m] : seed.w0)
        if (!assign(v, m, false)) return std::nullopt;
    for (auto& [v, m] : seed.w1)
        if (!assign(v, m, true)) return std::nullopt;

    // BFS distances from v*
    std::vector<int> dist(n, -1);
    dist[vstar] = 0;
    std::queue<int> q;
    q.push(vstar);
    int maxd = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : f.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                maxd = std::max(maxd, dist[v]);
                q.push(v);
            }
    }
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) return std::nullopt;  // disconnected

    std::vector<std::vector<int>> layer(maxd + 1);
    for (int v = 0; v < n; ++v) layer[dist[v]].push_back(v);

    // layer 2: unlabeled neighbors u of each w_j get their label via the
    // unique length-2 path to some v_t
    if (maxd >= 2) {
        for (int u : layer[2]) {
            if (labeled[u]) continue;
            std::uint64_t cand = 0;
            bool have = false;
            for (int wj : f.neighbors(u)) {
                if (dist[wj] != 1) continue;
                std::uint64_t base = lab.leaves[wj];  // size k-1
                // find the unique v_t with a common neighbor
                std::uint64_t adds = 0;
                for (std::size_t i = 1; i < seed.w0.size(); ++i) {
                    int vt = seed.w0[i].first;
                    bool path = false;
                    for (int x : f.neighbors(u))
                        if (f.adjacent(x, vt)) {
                            path = true;
                            break;
                        }
                    if (path) adds |= seed.w0[i].second ^ w1m;
                }
                if (std::popcount(adds) != 1) return std::nullopt;
                std::uint64_t m = base | adds;
                if (have && m != cand) return std::nullopt;
                cand = m;
                have = true;
            }
            if (!have) return std::nullopt;
            if (!assign(u, cand, false)) return std::nullopt;
        }
    }

    // layers d >= 3: intersect/union the labels of the previous layer
    for (int d = 3; d <= maxd; ++d) {
        for (int u : layer[d]) {
            if (labeled[u]) return std::nullopt;
            std::vector<int> prev;
            for (int y : f.neighbors(u))
                if (dist[y] == d - 1) prev.push_back(y);
            if (prev.size() < 2) return std::nullopt;
            for (int y : prev)
                if (!labeled[y]) return std::nullopt;
            bool center = (d % 2) == 1;
            std::uint64_t m;
            if (center) {
                m = leafmask;
                for (int y : prev) {
                    if (lab.has_center[y]) return std::nullopt;
                    m &= lab.leaves[y];
                }
                if (std::popcount(m) != sk - 1) return std::nullopt;
                for (int y : prev)
                    if (std::popcount(lab.leaves[y] & ~m) != 1) return std::nullopt;
            } else {
                m = 0;
                for (int y : prev) {
                    if (!lab.has_center[y]) return std::nullopt;
                    m |= lab.leaves[y];
                }
                if (std::popcount(m) != sk) return std::nullopt;
                for (int y : prev)
                    if (std::popcount(m & ~lab.leaves[y]) != 1) return std::nullopt;
            }
            if (!assign(u, m, center)) return std::nullopt;
        }
    }

    // ---- verify the labeling is an isomorphism ----
    for (int v = 0; v < n; ++v)
        if (!labeled[v]) return std::nullopt;
    {
        std::vector<std::uint64_t> keys;
        keys.reserve(n);
        for (int v = 0; v < n; ++v) keys.push_back(lab.leaves[v] << 1 | lab.has_center[v]);
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return std::nullopt;
    }
    long want_edges = static_cast<long>(binomial(sn, sk)) * sk;
    if (f.num_edges() != want_edges) return std::nullopt;
    for (auto [u, v] : f.edges()) {
        if (lab.has_center[u] == lab.has_center[v]) return std::nullopt;
        int c = lab.has_center[u] ? u : v;
        int o = lab.has_center[u] ? v : u;
        if ((lab.leaves[c] & lab.leaves[o]) != lab.leaves[c]) return std::nullopt;
    }
    return lab;
}

namespace {

StarSeed canonical_seed_vertices(const Graph& f, int vstar) {
    StarSeed s;
    s.w0.emplace_back(vstar, 0);
    auto w = f.neighbors(vstar);
    for (int x : w) s.w1.emplace_back(x, 0);
    auto v = f.neighbors(w.front());
    v.erase(std::remove(v.begin(), v.end(), vstar), v.end());
    for (int x : v) s.w0.emplace_back(x, 0);
    return s;
}

void fill_seed_labels(StarSeed& s, std::uint64_t s0, const std::vector<int>& s_elems,
                      const std::vector<int>& sigma, const std::vector<int>& t_elems,
                      const std::vector<int>& tau) {
    s.w0[0].second = s0;
    for (std::size_t t = 0; t < s.w1.size(); ++t) s.w1[t].second = s0 ^ (1ull << s_elems[sigma[t]]);
    std::uint64_t w1m = s.w1[0].second;
    for (std::size_t j = 1; j < s.w0.size(); ++j) s.w0[j].second = w1m | (1ull << t_elems[tau[j - 1]]);
}

int pick_vstar(const Graph& f) {
    // lowest-index vertex of the smaller-degree part; if the parts have equal
    // degree, the part containing vertex 0
    auto bip = bipartition(f);
    int deg[2] = {-1, -1};
    for (int v = 0; v < f.order(); ++v)
        if (deg[bip.side[v]] < 0) deg[bip.side[v]] = f.degree(v);
    int side = 0;
    if (deg[0] != deg[1]) side = deg[0] < deg[1] ? 0 : 1;
    for (int v = 0; v < f.order(); ++v)
        if (bip.side[v] == side) return v;
    return 0;
}

}  // namespace

std::optional<std::pair<StarParameters, StarLabeling>> recognize_star_token(const Graph& f) {
    auto p = star_parameters(f);
    if (!p) return std::nullopt;
    int vstar = pick_vstar(f);
    if (f.degree(vstar) != p->k) return std::nullopt;
    StarSeed seed = canonical_seed_vertices(f, vstar);
    if (static_cast<int>(seed.w1.size()) != p->k || static_cast<int>(seed.w0.size()) != 1 + p->n - p->k)
        return std::nullopt;
    std::vector<int> s_elems(p->k), t_elems(p->n - p->k), sigma(p->k), tau(p->n - p->k);
    std::iota(s_elems.begin(), s_elems.end(), 0);
    std::iota(t_elems.begin(), t_elems.end(), p->k);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::iota(tau.begin(), tau.end(), 0);
    fill_seed_labels(seed, (1ull << p->k) - 1, s_elems, sigma, t_elems, tau);
    auto lab = extend_labeling(f, *p, seed);
    if (!lab) return std::nullopt;
    return std::make_pair(*p, std::move(*lab));
}

long count_star_isomorphisms(const Graph& f, const StarParameters& p) {
    if (!recognize_star_token(f)) throw DomainError("count_star_isomorphisms: not a star token graph");
    int vstar = pick_vstar(f);
    StarSeed seed = canonical_seed_vertices(f, vstar);
    long count = 0;
    std::vector<int> sigma(p.k), tau(p.n - p.k);
    for (std::uint64_t s0 : k_subsets(p.n, p.k)) {
        auto s_elems = mask_to_vertices(s0);
        auto t_elems = mask_to_vertices(((1ull << p.n) - 1) ^ s0);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            std::iota(tau.begin(), tau.end(), 0);
            do {
                fill_seed_labels(seed, s0, s_elems, sigma, t_elems, tau);
                if (extend_labeling(f, p, seed)) ++count;
            } while (std::next_permutation(tau.begin(), tau.end()));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    if (2 * p.k == p.n + 1) count *= 2;
    return count;
}

}  // namespace tokengraph
