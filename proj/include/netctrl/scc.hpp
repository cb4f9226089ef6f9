#pragma once

#include <vector>

#include "netctrl/digraph.hpp"

namespace netctrl {

/// Timestamps and predecessor links of a full depth-first traversal. The
/// counter ticks once before each node starts and once before it ends, so
/// times are distinct in [1, 2n] and properly nested.
struct DfsAttributes {
    std::vector<int> predecessor;  // 0 = tree root; index 0 unused
    std::vector<char> visited;
    std::vector<int> start;
    std::vector<int> end;
};

/// Full DFS covering every node: roots are tried in `root_order`, neighbors
/// in ascending index order.
DfsAttributes dfs_forest(const Digraph& g, const std::vector<int>& root_order);

struct SccDecomposition {
    std::vector<NodeSet> components;        // discovery order of the second pass
    std::vector<char> child_flags;          // per component: no external in-edge
    std::vector<std::pair<int, int>> order; // direct condensation edges, component indices
    std::vector<int> component_of;          // node -> component index; index 0 unused
};

/// Kosaraju's two-pass decomposition: forward DFS in ascending root order,
/// then a DFS of the transpose with roots in decreasing end time.
SccDecomposition scc_decompose(const Digraph& g);

/// Components with no incoming edge from outside, in decomposition order.
std::vector<NodeSet> child_sccs(const SccDecomposition& d);

}  // namespace netctrl
