#include "netctrl/dilation.hpp"

#include <stdexcept>
#include <vector>

namespace netctrl {

namespace {

// In-links per right vertex; the alternating walk needs them.
std::vector<std::vector<int>> right_in_links(const BipartiteGraph& b) {
    std::vector<std::vector<int>> right_in(b.right_count + 1);
    for (int l = 1; l <= b.left_count; ++l)
        for (int r : b.left_adj[l]) right_in[r].push_back(l);
    return right_in;
}

NodeSet walk(const std::vector<std::vector<int>>& right_in, const Matching& m, int start) {
    std::vector<char> seen_right(m.right_count + 1, 0);
    std::vector<char> seen_left(m.left_count + 1, 0);
    std::vector<int> frontier{start};
    seen_right[start] = 1;
    std::vector<int> reached{start};

    while (!frontier.empty()) {
        std::vector<int> next;
        for (int r : frontier)
            for (int l : right_in[r]) {
                if (seen_left[l] || m.right_of_left[l] == r) continue;  // skip the matching link
                seen_left[l] = 1;
                int r2 = m.right_of_left[l];
                if (r2 != 0 && !seen_right[r2]) {
                    seen_right[r2] = 1;
                    reached.push_back(r2);
                    next.push_back(r2);
                }
            }
        frontier = std::move(next);
    }
    return NodeSet::from(std::move(reached));
}

}  // namespace

NodeSet alternating_reachable(const BipartiteGraph& b, const Matching& m, int start) {
    if (start < 1 || start > b.right_count)
        throw std::invalid_argument("alternating_reachable: start out of range");
    if (m.left_of_right[start] != 0)
        throw std::invalid_argument("alternating_reachable: start vertex is matched");
    return walk(right_in_links(b), m, start);
}

std::vector<DilationSet> dilation_sets(const BipartiteGraph& b, const Matching& m) {
    auto right_in = right_in_links(b);
    std::vector<DilationSet> sets;
    for (int anchor : m.unmatched_right())
        sets.push_back({anchor, walk(right_in, m, anchor)});
    return sets;
}

std::vector<DilationSet> dilation_sets(const Digraph& g) {
    BipartiteGraph b = bipartite_of(g);
    Matching m = maximum_matching(b);
    return dilation_sets(b, m);
}

}  // namespace netctrl
