#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "infcom/core.hpp"
#include "infcom/graph.hpp"

namespace infcom {

// Whole-graph search: reduce to the gamma-core, then repeatedly snapshot the
// connected component of the lightest live vertex (the next community, in
// increasing influence) and delete that vertex with cascade.  Keeps the last
// min(k, total) snapshots and returns them heaviest-first.
std::vector<Community> online_all(const WeightedGraph& g, std::uint32_t gamma,
                                  std::size_t k);

// Same results as online_all, but a first peeling pass only counts the
// communities so the second pass materializes components for just the last
// min(k, total) keynodes.
std::vector<Community> forward_search(const WeightedGraph& g, std::uint32_t gamma,
                                      std::size_t k);

struct OracleBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kDefaultOracleBound = 12;

// Reference enumeration straight from the definition: for every vertex u,
// lightest first, take the gamma-core of the subgraph of vertices at least
// as heavy as u; if u survives, its connected component is the community
// with influence w(u).  Returns all communities heaviest-first.  Refuses
// graphs larger than max_n.
std::vector<Community> oracle_enumerate(const WeightedGraph& g, std::uint32_t gamma,
                                        std::uint32_t max_n = kDefaultOracleBound);

}  // namespace infcom
