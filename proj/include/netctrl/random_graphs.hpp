#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "netctrl/digraph.hpp"

namespace netctrl {

enum class RandomModel { ErdosRenyi, SmallWorld, ScaleFree };

RandomModel parse_model_name(std::string_view name);

struct RandomParams {
    double p = 0.0;   // erdos-renyi edge probability
    int k = 0;        // small-world ring out-degree (even)
    double beta = 0.0;  // small-world rewiring probability
    int m = 0;        // scale-free out-edges per new node
};

/// Identical (model, n, params, seed) inputs give identical edge sets on any
/// platform: all sampling is derived from raw mt19937_64 words, never from
/// std distributions.
Digraph generate_random(RandomModel model, int n, const RandomParams& params,
                        std::uint64_t seed);

namespace rng {

/// Uniform in [0, 1), 53-bit resolution.
double uniform01(std::mt19937_64& gen);

/// Uniform integer in [0, bound); bound must be positive. Multiply-shift
/// mapping: deterministic, bias < 2^-64.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

}  // namespace rng

}  // namespace netctrl
