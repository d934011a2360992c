#ifndef TOKENGRAPH_LINE_GRAPH_HPP
#define TOKENGRAPH_LINE_GRAPH_HPP

#include <utility>
#include <vector>

#include "tokengraph/graph.hpp"

namespace tokengraph {

struct RootGraph {
    Graph root;
    std::vector<std::pair<int, int>> vertex_to_root_edge;  // per line-graph vertex
};

// Reconstruct a graph whose line graph equals l (vertex i of l becomes root
// edge vertex_to_root_edge[i]). Throws StructureError when l is not a line
// graph. With triangle_free_root the root is known triangle-free, which makes
// the Krausz partition canonical and resolves every K3 component to K_{1,3};
// without it a backtracking search is used and K3 components still resolve to
// K_{1,3} (the two roots are interchangeable there).
RootGraph invert_line_graph(const Graph& l, bool triangle_free_root);

}  // namespace tokengraph

#endif
