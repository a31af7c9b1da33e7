#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace infcom {

// Power-iteration PageRank on the simple undirected graph over n vertices
// (self-loops and duplicate edges are ignored).  Degree-zero vertices donate
// their mass uniformly, so the scores always sum to 1.
std::vector<double> pagerank(std::uint32_t n,
                             std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                             double damping = 0.85, std::uint32_t max_iters = 100,
                             double tol = 1e-9);

}  // namespace infcom
