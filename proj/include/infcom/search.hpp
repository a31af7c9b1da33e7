#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "infcom/core.hpp"
#include "infcom/graph.hpp"

namespace infcom {

struct QueryParams {
  std::uint32_t gamma = 1;
  std::uint32_t k = 1;
  double delta = 2.0;  // growth ratio, must be > 1
};

struct TraceIteration {
  double tau = 0;               // weight of the lightest window vertex
  std::uint32_t prefix_len = 0;
  std::uint64_t size = 0;       // |V| + |E| of the window
  std::uint64_t count = 0;      // communities known after this iteration
};

struct SearchTrace {
  std::vector<TraceIteration> iterations;
  std::uint64_t accessed_size() const {
    return iterations.empty() ? 0 : iterations.back().size;
  }
};

struct TopKResult {
  std::vector<Community> communities;  // decreasing influence, rank 1..
  SearchTrace trace;
  bool complete = false;   // found at least k
  std::uint64_t total_in_window = 0;  // communities of the final window
};

// Weight of the (k+gamma)-th heaviest vertex: the lightest window that could
// still hold k communities (a community needs gamma+1 vertices).
double initial_tau(const WeightedGraph& g, std::uint32_t gamma, std::uint32_t k);

// Top-k search by threshold growth: peel ever-larger weight prefixes until k
// communities exist, growing the window by factor delta in |V|+|E| each
// round, then enumerate on the final window.
TopKResult local_search(const WeightedGraph& g, const QueryParams& params);

// Partial peel for the progressive driver: run the count_ic loop but stop as
// soon as the lightest live vertex falls inside the previous window (its
// first stop_len vertices).  stop_len = 0 never stops early, reproducing
// count_ic.  Returns only the freshly discovered keys/cvs fragment.
KeyCvs construct_cvs(PrefixSubgraph& sub, std::uint32_t gamma, std::uint32_t stop_len);

// Streaming variant: emit every community of the graph in strictly
// decreasing influence order, lightest windows first, without a k.  The sink
// returns false to stop (checked after every emission).  Each emitted
// community is final: later windows never change it.
SearchTrace local_search_progressive(const WeightedGraph& g, std::uint32_t gamma,
                                     double delta,
                                     const std::function<bool(Community&&)>& sink);

}  // namespace infcom
