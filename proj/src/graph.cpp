#include "tokengraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tokengraph {

int Graph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row_word(u, w));
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = row_word(u, w);
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_valid_isomorphism(const Graph& g, const Graph& h, const Isomorphism& f) {
    int n = g.order();
    if (h.order() != n || static_cast<int>(f.map.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : f.map) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != h.adjacent(f.map[u], f.map[v])) return false;
    return true;
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int read_g6_size(std::string_view text, std::size_t& pos) {
    if (pos >= text.size()) throw ParseError("empty graph6 input", pos);
    unsigned char c = text[pos];
    if (c < kG6Lo || c > kG6Hi) throw ParseError("invalid graph6 byte", pos);
    if (c < kG6Hi) {
        ++pos;
        return c - kG6Lo;
    }
    // 126: three following bytes give an 18-bit count. Larger sizes are out
    // of scope for this library.
    if (pos + 3 >= text.size()) throw ParseError("truncated graph6 size header", text.size());
    if (static_cast<unsigned char>(text[pos + 1]) == kG6Hi)
        throw ParseError("graph6 sizes beyond 2^18 are not supported", pos + 1);
    long n = 0;
    for (int i = 1; i <= 3; ++i) {
        unsigned char b = text[pos + i];
        if (b < kG6Lo || b > kG6Hi) throw ParseError("invalid graph6 size byte", pos + i);
        n = (n << 6) | (b - kG6Lo);
    }
    pos += 4;
    return static_cast<int>(n);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    // tolerate a trailing newline
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (!text.empty() && text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    std::size_t pos = 0;
    int n = read_g6_size(text, pos);
    Graph g(n);
    long nbits = static_cast<long>(n) * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) < nbytes) throw ParseError("truncated graph6 body", text.size());
    if (static_cast<long>(text.size() - pos) > nbytes) throw ParseError("trailing bytes after graph6 body", pos + nbytes);
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned char c = text[pos + bit / 6];
            if (c < kG6Lo || c > kG6Hi) throw ParseError("invalid graph6 body byte", pos + bit / 6);
            if ((c - kG6Lo) >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    }
    // remaining padding bits must be zero
    for (; bit < nbytes * 6; ++bit) {
        unsigned char c = text[pos + bit / 6];
        if (c < kG6Lo || c > kG6Hi) throw ParseError("invalid graph6 body byte", pos + bit / 6);
        if ((c - kG6Lo) >> (5 - bit % 6) & 1) throw ParseError("nonzero graph6 padding", pos + bit / 6);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        if (n >= (1 << 18)) throw SizeError("graph6 sizes beyond 2^18 are not supported");
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + kG6Lo));
    return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

Graph parse_adjacency_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<int, int>> pairs;
    int declared = -1;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        int a;
        if (!(ls >> a)) continue;  // blank
        int b;
        if (!(ls >> b)) {
            if (first_content) {
                declared = a;
                first_content = false;
                continue;
            }
            throw ParseError("expected \"u v\" on line " + std::to_string(lineno), 0);
        }
        first_content = false;
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens on line " + std::to_string(lineno), 0);
        pairs.emplace_back(a, b);
    }
    int n = declared;
    for (auto [a, b] : pairs) n = std::max({n, a + 1, b + 1});
    if (n < 0) n = 0;
    Graph g(n);
    for (auto [a, b] : pairs) g.add_edge(a, b);
    return g;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || static_cast<int>(connected_components(g)[0].size()) == g.order();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> verts{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < verts.size(); ++head)
            for (int w : g.neighbors(verts[head]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    verts.push_back(w);
                }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;  // ordered by smallest vertex by construction
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
    return out;
}

bool is_c4_diamond_free(const Graph& g) {
    // An induced C4 or diamond exists iff some nonadjacent pair has two
    // common neighbors, or some adjacent pair has two nonadjacent common
    // neighbors.
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> common;
            for (int w = 0; w < g.row_words(); ++w) {
                std::uint64_t bits = g.row_word(u, w) & g.row_word(v, w);
                while (bits) {
                    common.push_back(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
            if (common.size() < 2) continue;
            if (!g.adjacent(u, v)) return false;
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j])) return false;
        }
    }
    return true;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph hypercube(int d) {
    if (d < 0 || d > 20) throw DomainError("bad hypercube dimension");
    Graph g(1 << d);
    for (int v = 0; v < (1 << d); ++v)
        for (int b = 0; b < d; ++b)
            if (!(v >> b & 1)) g.add_edge(v, v | (1 << b));
    return g;
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    int na = a.order(), nb = b.order();
    Graph g(na * nb);
    auto id = [nb](int x, int y) { return x * nb + y; };
    for (int x = 0; x < na; ++x)
        for (auto [y1, y2] : b.edges()) g.add_edge(id(x, y1), id(x, y2));
    for (int y = 0; y < nb; ++y)
        for (auto [x1, x2] : a.edges()) g.add_edge(id(x1, y), id(x2, y));
    return g;
}

}  // namespace tokengraph
