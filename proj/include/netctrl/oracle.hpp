#pragma once

#include <cstdint>
#include <vector>

#include "netctrl/digraph.hpp"

namespace netctrl {

struct BruteForceResult {
    bool feasible = false;
    int count = 0;
    NodeSet witness;  // first admissible set in (cardinality, lexicographic) order
};

/// Ground truth by enumeration: smallest accessible subset that passes the
/// structural verifier. Refuses graphs above `limit` nodes.
BruteForceResult brute_force_min_drivers(const Digraph& g, const NodeSet& inaccessible = {},
                                         int limit = 12);

inline constexpr std::uint64_t kFieldPrime = 2147483647;  // 2^31 - 1

/// Dense matrix over GF(kFieldPrime).
class FieldMatrix {
public:
    FieldMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    FieldMatrix multiply(const FieldMatrix& rhs) const;

    /// Rank by Gaussian elimination mod kFieldPrime. Destroys a copy.
    int rank() const;

private:
    int rows_, cols_;
    std::vector<std::uint64_t> a_;
};

struct NumericCheckResult {
    bool full_rank = false;
    int max_rank = 0;  // best controllability-matrix rank over all trials
    int trials = 0;    // trials actually run (stops early on a full-rank one)
};

/// Random-field realization check: draws nonzero values for every edge
/// (column = source, row = target) and driver column, builds
/// [B, AB, ..., A^(n-1)B], and ranks it over GF(kFieldPrime). Any full-rank
/// trial certifies structural controllability; repeated deficiency across
/// trials is overwhelming evidence against it.
NumericCheckResult numeric_controllability_check(const Digraph& g, const NodeSet& drivers,
                                                 int trials = 5, std::uint64_t seed = 1);

}  // namespace netctrl
