#include "netctrl/random_graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace netctrl {

namespace rng {

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(gen()) * bound) >> 64);
}

}  // namespace rng

RandomModel parse_model_name(std::string_view name) {
    if (name == "erdos-renyi") return RandomModel::ErdosRenyi;
    if (name == "small-world") return RandomModel::SmallWorld;
    if (name == "scale-free") return RandomModel::ScaleFree;
    throw std::invalid_argument("unknown random model: " + std::string(name));
}

namespace {

Digraph generate_erdos_renyi(int n, double p, std::mt19937_64& gen) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos-renyi: p must lie in [0, 1]");
    std::vector<Edge> edges;
    // One draw per ordered pair, row-major, self-pairs skipped without a draw.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (rng::uniform01(gen) < p) edges.emplace_back(i, j);
        }
    return Digraph(n, std::move(edges));
}

Digraph generate_small_world(int n, int k, double beta, std::mt19937_64& gen) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("small-world: k must be even and >= 2");
    if (k >= n) throw std::invalid_argument("small-world: k must be below n");
    if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("small-world: beta must lie in [0, 1]");

    auto wrap = [n](int v) { return (v - 1 + n) % n + 1; };

    // Ring lattice: each node points at its k nearest neighbors.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * k);
    for (int i = 1; i <= n; ++i)
        for (int d = 1; d <= k / 2; ++d) {
            edges.emplace_back(i, wrap(i + d));
            edges.emplace_back(i, wrap(i - d));
        }

    std::vector<std::vector<char>> present(n + 1, std::vector<char>(n + 1, 0));
    for (auto [u, v] : edges) present[u][v] = 1;

    for (auto& [u, v] : edges) {
        if (rng::uniform01(gen) >= beta) continue;
        // Retarget to a fresh endpoint; give up (keep the edge) if the node
        // is already saturated.
        for (int attempt = 0; attempt < 4 * n; ++attempt) {
            int w = static_cast<int>(rng::uniform_below(gen, static_cast<std::uint64_t>(n))) + 1;
            if (w == u || present[u][w]) continue;
            present[u][v] = 0;
            present[u][w] = 1;
            v = w;
            break;
        }
    }
    return Digraph(n, std::move(edges));
}

Digraph generate_scale_free(int n, int m, std::mt19937_64& gen) {
    if (m < 1) throw std::invalid_argument("scale-free: m must be >= 1");

    int seed_nodes = std::min(m, n);
    std::vector<Edge> edges;
    std::vector<int> in_degree(n + 1, 0);

    // Seed: directed cycle over the first m nodes (none when a single node).
    if (seed_nodes >= 2)
        for (int i = 1; i <= seed_nodes; ++i) {
            int j = i == seed_nodes ? 1 : i + 1;
            edges.emplace_back(i, j);
            ++in_degree[j];
        }

    for (int v = seed_nodes + 1; v <= n; ++v) {
        int existing = v - 1;
        std::vector<char> chosen(v, 0);
        for (int e = 0; e < m; ++e) {
            // Attachment weight: in-degree + 1, so degree-0 nodes stay reachable.
            std::uint64_t total = 0;
            for (int u = 1; u <= existing; ++u)
                if (!chosen[u]) total += static_cast<std::uint64_t>(in_degree[u]) + 1;
            if (total == 0) break;  // every existing node already targeted
            std::uint64_t r = rng::uniform_below(gen, total);
            int target = 0;
            for (int u = 1; u <= existing; ++u) {
                if (chosen[u]) continue;
                std::uint64_t w = static_cast<std::uint64_t>(in_degree[u]) + 1;
                if (r < w) {
                    target = u;
                    break;
                }
                r -= w;
            }
            chosen[target] = 1;
            edges.emplace_back(v, target);
            ++in_degree[target];
        }
    }
    return Digraph(n, std::move(edges));
}

}  // namespace

Digraph generate_random(RandomModel model, int n, const RandomParams& params,
                        std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_random: n must be positive");
    std::mt19937_64 gen(seed);
    switch (model) {
        case RandomModel::ErdosRenyi: return generate_erdos_renyi(n, params.p, gen);
        case RandomModel::SmallWorld: return generate_small_world(n, params.k, params.beta, gen);
        case RandomModel::ScaleFree: return generate_scale_free(n, params.m, gen);
    }
    throw std::invalid_argument("generate_random: unknown model");
}

}  // namespace netctrl
