#include "tokengraph/iso.hpp"

#include <algorithm>
#include <map>

namespace tokengraph {

namespace {

// Joint 1-dimensional color refinement so colors are comparable across the
// two graphs.
std::pair<std::vector<int>, std::vector<int>> joint_colors(const Graph& g, const Graph& h) {
    int n = g.order(), m = h.order();
    std::vector<int> col(n + m, 0);
    auto deg = [&](int i) { return i < n ? g.degree(i) : h.degree(i - n); };
    auto nbrs = [&](int i) {
        if (i < n) return g.neighbors(i);
        auto v = h.neighbors(i - n);
        for (int& x : v) x += n;
        return v;
    };
    {
        std::map<int, int> ids;
        for (int i = 0; i < n + m; ++i) ids.emplace(deg(i), 0);
        int next = 0;
        for (auto& [d, id] : ids) id = next++;
        for (int i = 0; i < n + m; ++i) col[i] = ids[deg(i)];
    }
    for (int round = 0; round < n + m; ++round) {
        std::vector<std::vector<int>> sig(n + m);
        for (int i = 0; i < n + m; ++i) {
            sig[i].push_back(col[i]);
            std::vector<int> nc;
            for (int j : nbrs(i)) nc.push_back(col[j]);
            std::sort(nc.begin(), nc.end());
            sig[i].insert(sig[i].end(), nc.begin(), nc.end());
        }
        std::map<std::vector<int>, int> ids;
        for (auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<int> ncol(n + m);
        for (int i = 0; i < n + m; ++i) ncol[i] = ids[sig[i]];
        if (ncol == col) break;
        col = std::move(ncol);
    }
    return {std::vector<int>(col.begin(), col.begin() + n), std::vector<int>(col.begin() + n, col.end())};
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;  // pattern vertices, connectivity-first
    std::vector<int> cg, ch;
    std::vector<int> image;  // per order position
    std::vector<char> used;
    bool find_one = false;
    std::vector<Isomorphism>* out = nullptr;
    long count = 0;
    bool done = false;

    explicit IsoSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
        int n = g.order();
        std::tie(cg, ch) = joint_colors(g, h);
        std::vector<char> placed(n, 0);
        std::vector<int> nplaced(n, 0);
        order.reserve(n);
        for (int t = 0; t < n; ++t) {
            int pick = -1;
            for (int u = 0; u < n; ++u) {
                if (placed[u]) continue;
                if (pick < 0 || nplaced[u] > nplaced[pick] ||
                    (nplaced[u] == nplaced[pick] && g.degree(u) > g.degree(pick)))
                    pick = u;
            }
            placed[pick] = 1;
            order.push_back(pick);
            for (int w : g.neighbors(pick)) ++nplaced[w];
        }
        image.assign(n, -1);
        used.assign(n, 0);
    }

    bool color_profiles_match() const {
        auto a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    void rec(int t) {
        int n = g.order();
        if (t == n) {
            ++count;
            if (out) {
                Isomorphism f;
                f.map.assign(n, -1);
                for (int i = 0; i < n; ++i) f.map[order[i]] = image[i];
                out->push_back(std::move(f));
            }
            if (find_one) done = true;
            return;
        }
        int u = order[t];
        for (int v = 0; v < n && !done; ++v) {
            if (used[v] || ch[v] != cg[u]) continue;
            bool ok = true;
            for (int j = 0; j < t; ++j)
                if (g.adjacent(u, order[j]) != h.adjacent(v, image[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v] = 1;
            image[t] = v;
            rec(t + 1);
            used[v] = 0;
        }
    }
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.num_edges() != h.num_edges()) return std::nullopt;
    IsoSearch s(g, h);
    if (!s.color_profiles_match()) return std::nullopt;
    std::vector<Isomorphism> found;
    s.find_one = true;
    s.out = &found;
    s.rec(0);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<Isomorphism> enumerate_isomorphisms(const Graph& g, const Graph& h, int max_order) {
    if (g.order() > max_order || h.order() > max_order)
        throw SizeError("enumerate_isomorphisms: order exceeds bound " + std::to_string(max_order));
    if (g.order() != h.order() || g.num_edges() != h.num_edges()) return {};
    IsoSearch s(g, h);
    if (!s.color_profiles_match()) return {};
    std::vector<Isomorphism> found;
    s.out = &found;
    s.rec(0);
    std::sort(found.begin(), found.end(), [](const Isomorphism& a, const Isomorphism& b) { return a.map < b.map; });
    return found;
}

long automorphism_count(const Graph& g, int max_order) {
    if (g.order() > max_order) throw SizeError("automorphism_count: order exceeds bound " + std::to_string(max_order));
    if (g.order() == 0) return 1;
    IsoSearch s(g, g);
    s.rec(0);
    return s.count;
}

namespace {

// Branch and bound for the minimal graph6 string. Invariant: the bits laid
// down so far always equal the corresponding prefix of `best`.
struct Canon {
    const Graph& g;
    int n;
    std::vector<std::uint8_t> best;  // flat colex bits, full length
    std::vector<int> perm;
    std::vector<char> used;

    explicit Canon(const Graph& g_) : g(g_), n(g_.order()), used(n, 0) {
        best = greedy_from({}, std::vector<char>(n, 0));
    }

    std::vector<std::uint8_t> greedy_from(std::vector<int> p, std::vector<char> us) const {
        std::vector<std::uint8_t> bits;
        for (auto v : p) (void)v;
        // recompute bits of the existing prefix
        for (std::size_t t = 1; t < p.size(); ++t)
            for (std::size_t j = 0; j < t; ++j) bits.push_back(g.adjacent(p[j], p[t]) ? 1 : 0);
        while (static_cast<int>(p.size()) < n) {
            int bestv = -1;
            std::vector<std::uint8_t> bestcol;
            for (int x = 0; x < n; ++x) {
                if (us[x]) continue;
                std::vector<std::uint8_t> col(p.size());
                for (std::size_t j = 0; j < p.size(); ++j) col[j] = g.adjacent(p[j], x) ? 1 : 0;
                if (bestv < 0 || col < bestcol) {
                    bestv = x;
                    bestcol = std::move(col);
                }
            }
            us[bestv] = 1;
            p.push_back(bestv);
            bits.insert(bits.end(), bestcol.begin(), bestcol.end());
        }
        return bits;
    }

    void rec(int t, long off) {
        if (t == n) return;
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            // column of x against the prefix, compared to best
            int cmp = 0;
            for (int j = 0; j < t && cmp == 0; ++j) {
                std::uint8_t b = g.adjacent(perm[j], x) ? 1 : 0;
                cmp = static_cast<int>(b) - static_cast<int>(best[off + j]);
            }
            if (cmp > 0) continue;
            perm.push_back(x);
            used[x] = 1;
            if (cmp < 0) {
                auto us = used;
                best = greedy_from(perm, us);
            }
            rec(t + 1, off + t);
            perm.pop_back();
            used[x] = 0;
        }
    }
};

}  // namespace

std::string canonical_graph6(const Graph& g) {
    int n = g.order();
    Canon c(g);
    c.rec(0, 0);
    Graph out(n);
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (c.best[bit]) out.add_edge(u, v);
    return emit_graph6(out);
}

}  // namespace tokengraph
