#pragma once

#include <vector>

#include "netctrl/digraph.hpp"
#include "netctrl/matching.hpp"

namespace netctrl {

/// A dilation: the right vertices reachable from one unmatched right vertex
/// by alternating paths. Its in-neighborhood in the digraph is strictly
/// smaller than the set itself.
struct DilationSet {
    int anchor = 0;   // the unmatched right vertex the walk starts from
    NodeSet members;  // includes the anchor

    bool operator==(const DilationSet&) const = default;
};

/// Right vertices reachable from `start` by paths that alternate a non-link
/// of m (right to left, against a link's direction) with a link of m (left
/// to right). `start` itself is included and must be unmatched.
NodeSet alternating_reachable(const BipartiteGraph& b, const Matching& m, int start);

/// One dilation set per unmatched right vertex, ascending by anchor.
std::vector<DilationSet> dilation_sets(const BipartiteGraph& b, const Matching& m);
std::vector<DilationSet> dilation_sets(const Digraph& g);

}  // namespace netctrl
