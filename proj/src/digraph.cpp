#include "netctrl/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netctrl {

NodeSet::NodeSet(std::initializer_list<int> xs) {
    members_.assign(xs);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet NodeSet::from(std::vector<int> xs) {
    NodeSet s;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    s.members_ = std::move(xs);
    return s;
}

bool NodeSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void NodeSet::insert(int v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet::from(std::move(out));
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet::from(std::move(out));
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet::from(std::move(out));
}

Digraph::Digraph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 1) throw std::invalid_argument("digraph: node count must be positive");
    for (auto [u, v] : edges_) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw std::invalid_argument("digraph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    out_.assign(n_ + 1, {});
    in_.assign(n_ + 1, {});
    for (auto [u, v] : edges_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    // edges_ is sorted, so out_ lists are already ascending
    for (auto& xs : in_) std::sort(xs.begin(), xs.end());

    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_) + 1)
        throw std::invalid_argument("digraph: label table must cover nodes 1..n");
}

bool Digraph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto& xs = out_[u];
    return std::binary_search(xs.begin(), xs.end(), v);
}

Digraph transpose(const Digraph& g) {
    std::vector<Edge> rev;
    rev.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) rev.emplace_back(v, u);
    return Digraph(g.node_count(), std::move(rev), g.labels());
}

std::size_t BipartiteGraph::link_count() const {
    std::size_t total = 0;
    for (const auto& xs : left_adj) total += xs.size();
    return total;
}

BipartiteGraph bipartite_of(const Digraph& g) {
    BipartiteGraph b;
    b.left_count = g.node_count();
    b.right_count = g.node_count();
    b.left_adj.assign(g.node_count() + 1, {});
    for (int v = 1; v <= g.node_count(); ++v) b.left_adj[v] = g.out_neighbors(v);
    return b;
}

}  // namespace netctrl
