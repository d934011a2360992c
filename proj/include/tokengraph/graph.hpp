#ifndef TOKENGRAPH_GRAPH_HPP
#define TOKENGRAPH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tokengraph/errors.hpp"

namespace tokengraph {

struct Edge {
    int u = 0, v = 0;  // u < v
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0) throw DomainError("negative vertex count");
    }

    int order() const { return n_; }

    int num_edges() const {
        int total = 0;
        for (int u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(1ull << (v % 64));
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(1ull << (u % 64));
    }

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;
    std::vector<Edge> edges() const;

    // 64-bit word w of row u.
    std::uint64_t row_word(int u, int w) const { return bits_[static_cast<std::size_t>(u) * words_ + w]; }
    int row_words() const { return words_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex index out of range");
        if (u == v) throw DomainError("self-loops are not allowed");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Isomorphism {
    std::vector<int> map;  // source vertex -> target vertex
    int operator()(int v) const { return map[v]; }
    friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

bool is_valid_isomorphism(const Graph& g, const Graph& h, const Isomorphism& f);

// graph6 (McKay). parse rejects trailing bytes and nonzero padding.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// newline-delimited graph6; blank lines are skipped
std::vector<Graph> parse_graph6_stream(std::string_view text);

// One "u v" pair per line, 0-based; blank lines ignored; first line may be a
// single integer giving the vertex count (otherwise max index + 1 is used).
Graph parse_adjacency_list(std::string_view text);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph disjoint_union(const Graph& a, const Graph& b);
bool is_c4_diamond_free(const Graph& g);

// Small named graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}
Graph petersen_graph();
Graph hypercube(int d);
Graph cartesian_product(const Graph& a, const Graph& b);

}  // namespace tokengraph

#endif
