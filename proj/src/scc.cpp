#include "netctrl/scc.hpp"

#include <algorithm>
#include <stdexcept>

namespace netctrl {

DfsAttributes dfs_forest(const Digraph& g, const std::vector<int>& root_order) {
    int n = g.node_count();
    if (root_order.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("dfs_forest: root order must list every node once");

    DfsAttributes a;
    a.predecessor.assign(n + 1, 0);
    a.visited.assign(n + 1, 0);
    a.start.assign(n + 1, 0);
    a.end.assign(n + 1, 0);

    int t = 0;
    // Iterative DFS; each frame remembers how far through its neighbor list
    // it has advanced.
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root : root_order) {
        if (root < 1 || root > n) throw std::invalid_argument("dfs_forest: root out of range");
        if (a.visited[root]) continue;
        a.visited[root] = 1;
        a.start[root] = ++t;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            const auto& next = g.out_neighbors(v);
            if (i < next.size()) {
                int w = next[i++];
                if (!a.visited[w]) {
                    a.visited[w] = 1;
                    a.predecessor[w] = v;
                    a.start[w] = ++t;
                    stack.emplace_back(w, 0);
                }
            } else {
                a.end[v] = ++t;
                stack.pop_back();
            }
        }
    }
    return a;
}

SccDecomposition scc_decompose(const Digraph& g) {
    int n = g.node_count();
    std::vector<int> ascending(n);
    for (int v = 1; v <= n; ++v) ascending[v - 1] = v;

    DfsAttributes first = dfs_forest(g, ascending);

    std::vector<int> by_end_desc = ascending;
    std::sort(by_end_desc.begin(), by_end_desc.end(),
              [&](int a, int b) { return first.end[a] > first.end[b]; });

    Digraph gt = transpose(g);
    DfsAttributes second = dfs_forest(gt, by_end_desc);

    SccDecomposition d;
    d.component_of.assign(n + 1, -1);

    // Each tree of the second pass is one component; recover the trees by
    // walking nodes in discovery order and following predecessor links.
    std::vector<int> by_start(n);
    for (int v = 1; v <= n; ++v) by_start[v - 1] = v;
    std::sort(by_start.begin(), by_start.end(),
              [&](int a, int b) { return second.start[a] < second.start[b]; });

    std::vector<std::vector<int>> members;
    for (int v : by_start) {
        int p = second.predecessor[v];
        int comp = p == 0 ? static_cast<int>(members.size()) : d.component_of[p];
        if (p == 0) members.emplace_back();
        d.component_of[v] = comp;
        members[comp].push_back(v);
    }
    for (auto& xs : members) d.components.push_back(NodeSet::from(std::move(xs)));

    d.child_flags.assign(d.components.size(), 1);
    std::vector<std::pair<int, int>> cross;
    for (auto [u, v] : g.edges()) {
        int cu = d.component_of[u], cv = d.component_of[v];
        if (cu == cv) continue;
        d.child_flags[cv] = 0;
        cross.emplace_back(cu, cv);
    }
    std::sort(cross.begin(), cross.end());
    cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
    d.order = std::move(cross);
    return d;
}

std::vector<NodeSet> child_sccs(const SccDecomposition& d) {
    std::vector<NodeSet> out;
    for (std::size_t i = 0; i < d.components.size(); ++i)
        if (d.child_flags[i]) out.push_back(d.components[i]);
    return out;
}

}  // namespace netctrl
