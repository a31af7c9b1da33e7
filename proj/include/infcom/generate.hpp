#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "infcom/graph.hpp"

namespace infcom {

struct GeneratedGraph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Erdos-Renyi G(n, p), deterministic for a given seed (geometric skip
// sampling over the pair index space).
GeneratedGraph gen_erdos(std::uint32_t n, double p, std::uint64_t seed);

// Preferential attachment: each new vertex links to m_per_vertex distinct
// existing vertices sampled proportionally to degree.
GeneratedGraph gen_powerlaw(std::uint32_t n, std::uint32_t m_per_vertex,
                            std::uint64_t seed);

// Distinct weights, a seeded random permutation of {1/n, ..., n/n}.
std::vector<double> random_distinct_weights(std::uint32_t n, std::uint64_t seed);

// Build a WeightedGraph with decimal labels "0".."n-1" and the given weights.
WeightedGraph to_weighted(const GeneratedGraph& gg, std::span<const double> weights);

}  // namespace infcom
