#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace netctrl {

/// Sorted, duplicate-free set of 1-based node indices.
class NodeSet {
public:
    NodeSet() = default;
    NodeSet(std::initializer_list<int> xs);

    /// Sorts and deduplicates.
    static NodeSet from(std::vector<int> xs);

    bool contains(int v) const;
    void insert(int v);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<int>& values() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const NodeSet&) const = default;

private:
    std::vector<int> members_;
};

NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);

using Edge = std::pair<int, int>;

/// Immutable directed graph on nodes 1..n. An edge (i, j) means node i
/// influences node j. Self-loops are allowed; parallel edges collapse.
class Digraph {
public:
    Digraph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Ascending target list of v.
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    /// Ascending source list of v.
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    bool has_edge(int u, int v) const;

    /// Empty when the graph is unlabeled; otherwise indexed 1..n.
    const std::vector<std::string>& labels() const { return labels_; }

private:
    int n_;
    std::vector<Edge> edges_;             // sorted lexicographically, unique
    std::vector<std::vector<int>> out_;   // index 0 unused
    std::vector<std::vector<int>> in_;
    std::vector<std::string> labels_;
};

/// Same nodes, every edge reversed. An involution.
Digraph transpose(const Digraph& g);

/// Bipartite link structure. Left vertex j carries links to the rights it
/// influences. Rectangular on purpose: driver-augmented graphs add extra
/// left vertices beyond n.
struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<int>> left_adj;  // index 0 unused; rights ascending

    std::size_t link_count() const;
};

/// Γ(g): one left and one right vertex per node, one link (j+, i-) per
/// edge (j, i).
BipartiteGraph bipartite_of(const Digraph& g);

}  // namespace netctrl
