#pragma once

#include <utility>
#include <vector>

#include "netctrl/digraph.hpp"

namespace netctrl {

struct Matching {
    int left_count = 0;
    int right_count = 0;
    std::vector<int> right_of_left;  // 0 = unmatched; index 0 unused
    std::vector<int> left_of_right;

    std::size_t size() const;
    std::vector<std::pair<int, int>> links() const;  // ascending by left
    NodeSet matched_right() const;
    NodeSet unmatched_right() const;
};

/// Maximum-cardinality matching. A greedy pass in ascending (left, right)
/// order seeds the result, then Hopcroft-Karp phases finish it, so the
/// outcome is deterministic.
Matching maximum_matching(const BipartiteGraph& b);

/// The unmatched right vertices (δM).
NodeSet unmatched_nodes(const Matching& m);

/// Structural rank of the graph's state matrix: |maximum matching|.
int s_rank(const Digraph& g);

/// Structural rank after one dedicated input column per driver: maximum
/// matching of the bipartite graph extended with one extra left vertex per
/// driver, linked only to that driver's right vertex.
int s_rank_with_drivers(const Digraph& g, const NodeSet& drivers);

}  // namespace netctrl
