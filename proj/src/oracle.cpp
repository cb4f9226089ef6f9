#include "netctrl/oracle.hpp"

#include <random>
#include <stdexcept>

#include "netctrl/driver.hpp"
#include "netctrl/random_graphs.hpp"

namespace netctrl {

BruteForceResult brute_force_min_drivers(const Digraph& g, const NodeSet& inaccessible,
                                         int limit) {
    int n = g.node_count();
    if (n > limit)
        throw std::invalid_argument("brute_force_min_drivers: graph exceeds the node limit");
    for (int v : inaccessible)
        if (v < 1 || v > n) throw std::invalid_argument("inaccessible node out of range");

    std::vector<int> pool;
    for (int v = 1; v <= n; ++v)
        if (!inaccessible.contains(v)) pool.push_back(v);

    // Subsets in ascending cardinality, lexicographic within each size.
    std::vector<int> pick;
    auto search = [&](auto&& self, int from, int remaining) -> bool {
        if (remaining == 0)
            return verify_structural_controllability(g, NodeSet::from(pick)).controllable();
        for (std::size_t i = from; i + remaining <= pool.size() + 0u; ++i) {
            pick.push_back(pool[i]);
            if (self(self, static_cast<int>(i) + 1, remaining - 1)) return true;
            pick.pop_back();
        }
        return false;
    };

    for (int size = 1; size <= static_cast<int>(pool.size()); ++size) {
        pick.clear();
        if (search(search, 0, size))
            return {true, size, NodeSet::from(pick)};
    }
    return {false, 0, {}};
}

FieldMatrix::FieldMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("field matrix: shape mismatch");
    FieldMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = (out.at(i, j) + x * rhs.at(k, j)) % kFieldPrime;
        }
    return out;
}

namespace {

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    base %= kFieldPrime;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % kFieldPrime;
        base = base * base % kFieldPrime;
        exp >>= 1;
    }
    return acc;
}

std::uint64_t invert_mod(std::uint64_t x) { return power_mod(x, kFieldPrime - 2); }

}  // namespace

int FieldMatrix::rank() const {
    FieldMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < m.cols_ && rank < m.rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows_; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols_; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        std::uint64_t inv = invert_mod(m.at(rank, col));
        for (int r = rank + 1; r < m.rows_; ++r) {
            std::uint64_t factor = m.at(r, col) * inv % kFieldPrime;
            if (factor == 0) continue;
            for (int c = col; c < m.cols_; ++c) {
                std::uint64_t sub = factor * m.at(rank, c) % kFieldPrime;
                m.at(r, c) = (m.at(r, c) + kFieldPrime - sub) % kFieldPrime;
            }
        }
        ++rank;
    }
    return rank;
}

NumericCheckResult numeric_controllability_check(const Digraph& g, const NodeSet& drivers,
                                                 int trials, std::uint64_t seed) {
    if (drivers.empty())
        throw std::invalid_argument("numeric_controllability_check: empty driver set");
    if (trials < 1) throw std::invalid_argument("numeric_controllability_check: trials must be >= 1");
    for (int d : drivers)
        if (d < 1 || d > g.node_count())
            throw std::invalid_argument("numeric_controllability_check: driver out of range");

    int n = g.node_count();
    int cols = static_cast<int>(drivers.size());
    std::mt19937_64 gen(seed);
    auto nonzero = [&] { return rng::uniform_below(gen, kFieldPrime - 1) + 1; };

    NumericCheckResult result;
    for (int t = 0; t < trials; ++t) {
        ++result.trials;
        FieldMatrix a(n, n);
        for (auto [u, v] : g.edges()) a.at(v - 1, u - 1) = nonzero();
        FieldMatrix b(n, cols);
        {
            int col = 0;
            for (int d : drivers) b.at(d - 1, col++) = nonzero();
        }

        FieldMatrix ctrl(n, n * cols);
        FieldMatrix block = b;
        for (int k = 0; k < n; ++k) {
            if (k > 0) block = a.multiply(block);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < cols; ++c) ctrl.at(r, k * cols + c) = block.at(r, c);
        }
        int rank = ctrl.rank();
        result.max_rank = std::max(result.max_rank, rank);
        if (rank == n) {
            result.full_rank = true;
            break;
        }
    }
    return result;
}

}  // namespace netctrl
