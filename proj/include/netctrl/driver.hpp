#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "netctrl/digraph.hpp"
#include "netctrl/dilation.hpp"
#include "netctrl/scc.hpp"

namespace netctrl {

/// No admissible driver assignment exists (an inaccessible dilation set or
/// child component, or no system of distinct accessible representatives).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class VerifyStatus { Controllable, FailsConnectivity, FailsRank };

struct VerificationResult {
    VerifyStatus status = VerifyStatus::Controllable;
    NodeSet unreachable;    // witness when connectivity fails
    int rank_deficit = 0;   // n - achievable structural rank when rank fails

    bool controllable() const { return status == VerifyStatus::Controllable; }
};

/// Checks the two structural conditions in order: every node reachable from
/// the driver set, then full structural rank with one input column per
/// driver. Reports the first one that fails.
VerificationResult verify_structural_controllability(const Digraph& g, const NodeSet& drivers);

struct Pairing {
    int dilation_index = 0;  // index into the dilation list
    int child_index = 0;     // index into the child component list
    int node = 0;            // shared node serving both

    bool operator==(const Pairing&) const = default;
};

/// One representative per dilation set (distinct accessible nodes) plus the
/// maximum number of child components covered through those representatives.
struct PairingPlan {
    std::vector<int> representatives;  // per dilation, parallel to the input
    std::vector<Pairing> pairings;     // ascending by dilation index
};

/// The assignment stage for an externally supplied decomposition: routes one
/// unit of flow per dilation set through a distinct accessible member node,
/// pairing as many distinct child components as possible along the way.
/// `anchors`, when given (parallel to `dilations`), names each set's
/// preferred private representative. Throws InfeasibleError when no
/// assignment exists. Distinctness is the strongest guarantee member sets
/// alone support; the full pipeline below works on the graph itself and
/// routes disjoint alternating walks instead.
PairingPlan compute_pairings(const std::vector<NodeSet>& dilations,
                             const std::vector<NodeSet>& childs,
                             const NodeSet& inaccessible,
                             const std::vector<int>& anchors = {});

/// Minimum number of accessible driver nodes:
///   |dilations| + |child components| - |pairings|.
/// Exact: representatives come from vertex-disjoint alternating walks, so
/// the chosen set always realizes the count and no smaller set can.
int min_driver_count(const Digraph& g, const NodeSet& inaccessible = {});

struct SparsePattern {
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<int, int>> nonzeros;  // (row, col), 1-based

    bool operator==(const SparsePattern&) const = default;
};

/// Input-matrix zero pattern for a driver set: column k feeds the k-th
/// smallest driver.
SparsePattern input_matrix_structure(int n, const NodeSet& drivers);

struct DriverTags {
    bool type_i = false;   // covers a child component (connectivity)
    bool type_ii = false;  // represents a dilation set (rank)

    bool operator==(const DriverTags&) const = default;
};

struct DriverReport {
    int n_min = 0;
    NodeSet drivers;
    std::map<int, DriverTags> types;
    std::vector<DilationSet> dilations;
    std::vector<NodeSet> child_sccs;
    std::vector<Pairing> pairings;
    SparsePattern input_pattern;
    bool connectivity_ok = false;
    bool rank_ok = false;

    bool verified() const { return connectivity_ok && rank_ok; }
};

/// Full pipeline: decompose, pair, pick a minimum driver set, tag each
/// driver, and verify the result on the spot.
DriverReport select_driver_nodes(const Digraph& g, const NodeSet& inaccessible = {});

}  // namespace netctrl
