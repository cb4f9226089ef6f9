#include "netctrl/matching.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace netctrl {

std::size_t Matching::size() const {
    std::size_t total = 0;
    for (int l = 1; l <= left_count; ++l)
        if (right_of_left[l] != 0) ++total;
    return total;
}

std::vector<std::pair<int, int>> Matching::links() const {
    std::vector<std::pair<int, int>> out;
    for (int l = 1; l <= left_count; ++l)
        if (right_of_left[l] != 0) out.emplace_back(l, right_of_left[l]);
    return out;
}

NodeSet Matching::matched_right() const {
    std::vector<int> out;
    for (int r = 1; r <= right_count; ++r)
        if (left_of_right[r] != 0) out.push_back(r);
    return NodeSet::from(std::move(out));
}

NodeSet Matching::unmatched_right() const {
    std::vector<int> out;
    for (int r = 1; r <= right_count; ++r)
        if (left_of_right[r] == 0) out.push_back(r);
    return NodeSet::from(std::move(out));
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    const BipartiteGraph& b;
    std::vector<int>& match_l;  // right of left
    std::vector<int>& match_r;  // left of right
    std::vector<int> dist;

    bool bfs() {
        std::deque<int> queue;
        dist.assign(b.left_count + 1, kInf);
        for (int l = 1; l <= b.left_count; ++l)
            if (match_l[l] == 0) {
                dist[l] = 0;
                queue.push_back(l);
            }
        bool reachable_free_right = false;
        while (!queue.empty()) {
            int l = queue.front();
            queue.pop_front();
            for (int r : b.left_adj[l]) {
                int l2 = match_r[r];
                if (l2 == 0) {
                    reachable_free_right = true;
                } else if (dist[l2] == kInf) {
                    dist[l2] = dist[l] + 1;
                    queue.push_back(l2);
                }
            }
        }
        return reachable_free_right;
    }

    bool dfs(int l) {
        for (int r : b.left_adj[l]) {
            int l2 = match_r[r];
            if (l2 == 0 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        dist[l] = kInf;
        return false;
    }
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& b) {
    Matching m;
    m.left_count = b.left_count;
    m.right_count = b.right_count;
    m.right_of_left.assign(b.left_count + 1, 0);
    m.left_of_right.assign(b.right_count + 1, 0);

    for (int l = 1; l <= b.left_count; ++l)
        for (int r : b.left_adj[l]) {
            if (m.left_of_right[r] == 0) {
                m.right_of_left[l] = r;
                m.left_of_right[r] = l;
                break;
            }
        }

    HopcroftKarp hk{b, m.right_of_left, m.left_of_right, {}};
    while (hk.bfs())
        for (int l = 1; l <= b.left_count; ++l)
            if (m.right_of_left[l] == 0) hk.dfs(l);
    return m;
}

NodeSet unmatched_nodes(const Matching& m) { return m.unmatched_right(); }

int s_rank(const Digraph& g) {
    return static_cast<int>(maximum_matching(bipartite_of(g)).size());
}

int s_rank_with_drivers(const Digraph& g, const NodeSet& drivers) {
    for (int d : drivers)
        if (d < 1 || d > g.node_count())
            throw std::invalid_argument("s_rank_with_drivers: driver out of range");
    BipartiteGraph b = bipartite_of(g);
    b.left_count = g.node_count() + static_cast<int>(drivers.size());
    for (int d : drivers) b.left_adj.push_back({d});
    return static_cast<int>(maximum_matching(b).size());
}

}  // namespace netctrl
