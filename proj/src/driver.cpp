#include "netctrl/driver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "netctrl/matching.hpp"

namespace netctrl {

VerificationResult verify_structural_controllability(const Digraph& g, const NodeSet& drivers) {
    if (drivers.empty())
        throw std::invalid_argument("verify_structural_controllability: empty driver set");
    for (int d : drivers)
        if (d < 1 || d > g.node_count())
            throw std::invalid_argument("verify_structural_controllability: driver out of range");

    std::vector<char> reached(g.node_count() + 1, 0);
    std::deque<int> queue(drivers.begin(), drivers.end());
    for (int d : drivers) reached[d] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.out_neighbors(v))
            if (!reached[w]) {
                reached[w] = 1;
                queue.push_back(w);
            }
    }
    std::vector<int> missing;
    for (int v = 1; v <= g.node_count(); ++v)
        if (!reached[v]) missing.push_back(v);
    if (!missing.empty())
        return {VerifyStatus::FailsConnectivity, NodeSet::from(std::move(missing)), 0};

    int rank = s_rank_with_drivers(g, drivers);
    if (rank < g.node_count())
        return {VerifyStatus::FailsRank, {}, g.node_count() - rank};
    return {VerifyStatus::Controllable, {}, 0};
}

namespace {

// Unit-capacity min-cost max-flow via successive shortest paths. Sizes here
// are modest (one unit per dilation set), so SPFA per augmentation is plenty.
class MinCostFlow {
public:
    int add_node() {
        arcs_.emplace_back();
        return static_cast<int>(arcs_.size()) - 1;
    }

    // Returns the index of the forward arc within arcs(from).
    int add_arc(int from, int to, int cap, int cost) {
        arcs_[from].push_back({to, static_cast<int>(arcs_[to].size()), cap, cost});
        arcs_[to].push_back({from, static_cast<int>(arcs_[from].size()) - 1, 0, -cost});
        return static_cast<int>(arcs_[from].size()) - 1;
    }

    // Augments one unit at a time along a cheapest residual path.
    std::pair<int, int> run(int source, int sink) {
        int flow = 0, cost = 0;
        while (true) {
            auto [ok, path_cost] = augment(source, sink);
            if (!ok) break;
            ++flow;
            cost += path_cost;
        }
        return {flow, cost};
    }

    bool saturated(int from, int arc_index) const { return arcs_[from][arc_index].cap == 0; }

private:
    struct Arc {
        int to, rev, cap, cost;
    };

    std::pair<bool, int> augment(int source, int sink) {
        constexpr int kInf = std::numeric_limits<int>::max();
        int n = static_cast<int>(arcs_.size());
        std::vector<int> dist(n, kInf), prev_node(n, -1), prev_arc(n, -1);
        std::vector<char> queued(n, 0);
        std::deque<int> queue{source};
        dist[source] = 0;
        queued[source] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            queued[v] = 0;
            for (std::size_t i = 0; i < arcs_[v].size(); ++i) {
                const Arc& a = arcs_[v][i];
                if (a.cap <= 0) continue;
                int nd = dist[v] + a.cost;
                if (nd < dist[a.to]) {
                    dist[a.to] = nd;
                    prev_node[a.to] = v;
                    prev_arc[a.to] = static_cast<int>(i);
                    if (!queued[a.to]) {
                        queued[a.to] = 1;
                        queue.push_back(a.to);
                    }
                }
            }
        }
        if (dist[sink] == kInf) return {false, 0};
        for (int v = sink; v != source; v = prev_node[v]) {
            Arc& a = arcs_[prev_node[v]][prev_arc[v]];
            a.cap -= 1;
            arcs_[v][a.rev].cap += 1;
        }
        return {true, dist[sink]};
    }

    std::vector<std::vector<Arc>> arcs_;
};

}  // namespace

PairingPlan compute_pairings(const std::vector<NodeSet>& dilations,
                             const std::vector<NodeSet>& childs,
                             const NodeSet& inaccessible,
                             const std::vector<int>& anchors) {
    if (!anchors.empty() && anchors.size() != dilations.size())
        throw std::invalid_argument("compute_pairings: anchors must parallel the dilation list");

    auto accessible = [&](int v) { return !inaccessible.contains(v); };

    for (std::size_t i = 0; i < dilations.size(); ++i)
        if (std::none_of(dilations[i].begin(), dilations[i].end(), accessible))
            throw InfeasibleError("every node of dilation set " + std::to_string(i) +
                                  " is inaccessible");
    for (std::size_t c = 0; c < childs.size(); ++c)
        if (std::none_of(childs[c].begin(), childs[c].end(), accessible))
            throw InfeasibleError("child component " + std::to_string(c) +
                                  " is fully inaccessible");

    int max_node = 0;
    for (const auto& s : dilations)
        if (!s.empty()) max_node = std::max(max_node, s.values().back());
    for (const auto& s : childs)
        if (!s.empty()) max_node = std::max(max_node, s.values().back());

    std::vector<int> child_of(max_node + 1, -1);
    for (std::size_t c = 0; c < childs.size(); ++c)
        for (int v : childs[c]) child_of[v] = static_cast<int>(c);

    // With nothing inaccessible a set's anchor is always a valid private
    // representative, so the direct route collapses to one arc per set and
    // only members sitting inside child components enter the network.
    bool anchor_direct = !anchors.empty() && inaccessible.empty();

    MinCostFlow flow;
    int source = flow.add_node();
    int sink = flow.add_node();

    std::vector<int> set_node(dilations.size());
    for (std::size_t i = 0; i < dilations.size(); ++i) {
        set_node[i] = flow.add_node();
        flow.add_arc(source, set_node[i], 1, 0);
    }

    std::vector<int> node_in(max_node + 1, -1), node_out(max_node + 1, -1);
    std::vector<int> child_arc(max_node + 1, -1);  // node_out -> child component
    auto ensure_node = [&](int v) {
        if (node_in[v] >= 0) return;
        node_in[v] = flow.add_node();
        node_out[v] = flow.add_node();
        flow.add_arc(node_in[v], node_out[v], 1, 0);
        flow.add_arc(node_out[v], sink, 1, 1);  // serve as a plain representative
    };

    std::vector<int> child_node(childs.size(), -1);
    for (std::size_t c = 0; c < childs.size(); ++c) {
        child_node[c] = flow.add_node();
        flow.add_arc(child_node[c], sink, 1, 0);  // each child pairs at most once
    }

    std::vector<std::vector<std::pair<int, int>>> member_arcs(dilations.size());  // (node, arc)
    std::vector<int> direct_arc(dilations.size(), -1);
    for (std::size_t i = 0; i < dilations.size(); ++i) {
        for (int v : dilations[i]) {
            if (!accessible(v)) continue;
            if (anchor_direct && child_of[v] < 0) continue;
            ensure_node(v);
            member_arcs[i].emplace_back(v, flow.add_arc(set_node[i], node_in[v], 1, 0));
        }
        if (anchor_direct) direct_arc[i] = flow.add_arc(set_node[i], sink, 1, 1);
    }
    for (int v = 1; v <= max_node; ++v)
        if (node_in[v] >= 0 && child_of[v] >= 0)
            child_arc[v] = flow.add_arc(node_out[v], child_node[child_of[v]], 1, 0);

    auto [pushed, cost] = flow.run(source, sink);
    (void)cost;
    if (pushed < static_cast<int>(dilations.size()))
        throw InfeasibleError("no system of distinct accessible representatives exists");

    PairingPlan plan;
    plan.representatives.assign(dilations.size(), 0);
    std::vector<int> routed_child(dilations.size(), -1);

    for (std::size_t i = 0; i < dilations.size(); ++i) {
        if (direct_arc[i] >= 0 && flow.saturated(set_node[i], direct_arc[i])) {
            plan.representatives[i] = anchors[i];
            continue;
        }
        int used = 0;
        for (auto [v, arc] : member_arcs[i])
            if (flow.saturated(set_node[i], arc)) {
                used = v;
                break;
            }
        plan.representatives[i] = used;
        if (child_arc[used] >= 0 && flow.saturated(node_out[used], child_arc[used]))
            routed_child[i] = child_of[used];
    }

    // Direct representatives prefer the set's own anchor when it is usable:
    // anchors never belong to another dilation set, so the swap cannot
    // collide with any other representative.
    if (!anchors.empty())
        for (std::size_t i = 0; i < dilations.size(); ++i)
            if (routed_child[i] < 0 && accessible(anchors[i]))
                plan.representatives[i] = anchors[i];

    for (std::size_t i = 0; i < dilations.size(); ++i)
        if (routed_child[i] >= 0)
            plan.pairings.push_back({static_cast<int>(i), routed_child[i], plan.representatives[i]});
    return plan;
}

namespace {

// Routing stage of the full pipeline. One flow unit starts at each unmatched
// right vertex and walks right-to-right: from r to the matched partner of
// any in-neighbor of r other than r's own match (the same step the dilation
// walk takes). Flipping the links along such a walk re-matches every vertex
// on it except the last, so the endpoints of vertex-disjoint walks are the
// unmatched set of some other maximum matching, and one input column on each
// endpoint restores full structural rank. Distinct representatives that do
// not come from disjoint walks carry no such guarantee, which is why the
// routing works on walks rather than on the member sets. Endpoints must be
// accessible; ending inside a child component covers it (cost 0 versus cost
// 1 for a plain exit), so min-cost max-flow maximizes the covered count k*.
struct Routing {
    std::vector<int> representatives;  // per anchor, ascending anchor order
    std::vector<Pairing> pairings;     // ascending by dilation index
};

Routing route_representatives(const Digraph& g, const Matching& m,
                              const std::vector<int>& anchors,
                              const std::vector<NodeSet>& childs,
                              const NodeSet& inaccessible) {
    int n = g.node_count();
    auto accessible = [&](int v) { return !inaccessible.contains(v); };

    std::vector<int> child_of(n + 1, -1);
    for (std::size_t c = 0; c < childs.size(); ++c)
        for (int v : childs[c]) child_of[v] = static_cast<int>(c);

    MinCostFlow flow;
    int source = flow.add_node();
    int sink = flow.add_node();
    for (int v = 1; v <= n; ++v) {
        flow.add_node();  // 2v: entry side, capacity 1 through the vertex
        flow.add_node();  // 2v + 1: exit side
    }
    auto node_in = [](int v) { return 2 * v; };
    auto node_out = [](int v) { return 2 * v + 1; };
    std::vector<int> gadget(childs.size());
    for (auto& c : gadget) c = flow.add_node();

    for (int v = 1; v <= n; ++v) flow.add_arc(node_in(v), node_out(v), 1, 0);

    std::vector<int> start_arc(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i)
        start_arc[i] = flow.add_arc(source, node_in(anchors[i]), 1, 0);

    struct Step {
        int arc, next;
    };
    struct Exit {
        int arc, child;  // child -1: plain representative
    };
    std::vector<std::vector<Step>> steps(n + 1);
    std::vector<std::vector<Exit>> exits(n + 1);
    for (int v = 1; v <= n; ++v) {
        for (int l : g.in_neighbors(v)) {
            int w = m.right_of_left[l];
            if (w == 0 || w == v) continue;  // skip the matching link
            steps[v].push_back({flow.add_arc(node_out(v), node_in(w), 1, 0), w});
        }
        if (!accessible(v)) continue;
        exits[v].push_back({flow.add_arc(node_out(v), sink, 1, 1), -1});
        if (child_of[v] >= 0)
            exits[v].push_back({flow.add_arc(node_out(v), gadget[child_of[v]], 1, 0), child_of[v]});
    }
    for (std::size_t c = 0; c < childs.size(); ++c) flow.add_arc(gadget[c], sink, 1, 0);

    auto [pushed, cost] = flow.run(source, sink);
    (void)cost;
    if (pushed < static_cast<int>(anchors.size())) {
        // Name a fully inaccessible dilation set when one exists; otherwise
        // the sets starve each other (their walks meet on shared vertices).
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            if (flow.saturated(source, start_arc[i])) continue;
            std::vector<char> seen(n + 1, 0);
            std::deque<int> q{anchors[i]};
            seen[anchors[i]] = 1;
            bool reachable_accessible = false;
            while (!q.empty() && !reachable_accessible) {
                int v = q.front();
                q.pop_front();
                if (accessible(v)) {
                    reachable_accessible = true;
                    break;
                }
                for (const Step& s : steps[v])
                    if (!seen[s.next]) {
                        seen[s.next] = 1;
                        q.push_back(s.next);
                    }
            }
            if (!reachable_accessible)
                throw InfeasibleError("every node of the dilation set anchored at " +
                                      std::to_string(anchors[i]) + " is inaccessible");
        }
        throw InfeasibleError(
            "dilation sets compete for the same accessible nodes; no disjoint "
            "representative assignment exists");
    }

    // Every vertex passes at most one unit, so each walk is recovered by
    // following the unique saturated outgoing arc from its anchor.
    Routing r;
    r.representatives.assign(anchors.size(), 0);
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        int v = anchors[i];
        int paired_child = -1;
        for (;;) {
            bool stepped = false;
            for (const Step& s : steps[v])
                if (flow.saturated(node_out(v), s.arc)) {
                    v = s.next;
                    stepped = true;
                    break;
                }
            if (stepped) continue;
            for (const Exit& e : exits[v])
                if (flow.saturated(node_out(v), e.arc)) {
                    paired_child = e.child;
                    break;
                }
            break;
        }
        // A walk that covers no child shrinks to its own anchor when the
        // anchor is accessible; anchors lie on no other walk, so truncating
        // keeps the family disjoint.
        if (paired_child < 0 && accessible(anchors[i])) v = anchors[i];
        r.representatives[i] = v;
        if (paired_child >= 0)
            r.pairings.push_back({static_cast<int>(i), paired_child, v});
    }
    return r;
}

struct Analysis {
    BipartiteGraph b;
    Matching m;
    std::vector<int> anchors;  // unmatched right vertices, ascending
    SccDecomposition scc;
    std::vector<NodeSet> childs;
    Routing routing;
};

Analysis analyze(const Digraph& g, const NodeSet& inaccessible) {
    for (int v : inaccessible)
        if (v < 1 || v > g.node_count())
            throw std::invalid_argument("inaccessible node out of range");

    Analysis a;
    a.b = bipartite_of(g);
    a.m = maximum_matching(a.b);
    a.anchors = unmatched_nodes(a.m).values();
    a.scc = scc_decompose(g);
    a.childs = child_sccs(a.scc);

    auto accessible = [&](int v) { return !inaccessible.contains(v); };
    for (std::size_t c = 0; c < a.childs.size(); ++c)
        if (std::none_of(a.childs[c].begin(), a.childs[c].end(), accessible))
            throw InfeasibleError("child component " + std::to_string(c) +
                                  " is fully inaccessible");

    a.routing = route_representatives(g, a.m, a.anchors, a.childs, inaccessible);
    return a;
}

}  // namespace

int min_driver_count(const Digraph& g, const NodeSet& inaccessible) {
    Analysis a = analyze(g, inaccessible);
    return static_cast<int>(a.anchors.size() + a.childs.size() - a.routing.pairings.size());
}

SparsePattern input_matrix_structure(int n, const NodeSet& drivers) {
    if (drivers.empty()) throw std::invalid_argument("input_matrix_structure: empty driver set");
    SparsePattern p;
    p.rows = n;
    p.cols = static_cast<int>(drivers.size());
    int col = 0;
    for (int d : drivers) {
        if (d < 1 || d > n) throw std::invalid_argument("input_matrix_structure: driver out of range");
        p.nonzeros.emplace_back(d, ++col);
    }
    return p;
}

DriverReport select_driver_nodes(const Digraph& g, const NodeSet& inaccessible) {
    Analysis a = analyze(g, inaccessible);

    DriverReport report;
    report.dilations = dilation_sets(a.b, a.m);
    report.child_sccs = a.childs;
    report.pairings = a.routing.pairings;

    std::vector<char> child_covered(a.childs.size(), 0);
    for (const auto& p : a.routing.pairings) child_covered[p.child_index] = 1;

    std::vector<int> chosen;
    for (std::size_t i = 0; i < a.anchors.size(); ++i) {
        int rep = a.routing.representatives[i];
        chosen.push_back(rep);
        report.types[rep].type_ii = true;
    }
    for (const auto& p : a.routing.pairings) report.types[p.node].type_i = true;

    // Each unpaired child component contributes its lowest accessible node.
    for (std::size_t c = 0; c < a.childs.size(); ++c) {
        if (child_covered[c]) continue;
        for (int v : a.childs[c])
            if (!inaccessible.contains(v)) {
                chosen.push_back(v);
                report.types[v].type_i = true;
                break;
            }
    }

    report.drivers = NodeSet::from(std::move(chosen));
    report.n_min =
        static_cast<int>(a.anchors.size() + a.childs.size() - a.routing.pairings.size());
    report.input_pattern = input_matrix_structure(g.node_count(), report.drivers);

    VerificationResult v = verify_structural_controllability(g, report.drivers);
    report.connectivity_ok = v.status != VerifyStatus::FailsConnectivity;
    report.rank_ok = v.status == VerifyStatus::Controllable;
    if (v.status == VerifyStatus::FailsConnectivity)
        report.rank_ok = s_rank_with_drivers(g, report.drivers) == g.node_count();
    return report;
}

}  // namespace netctrl
