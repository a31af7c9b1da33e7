#pragma once

#include <span>
#include <string>

#include "infcom/core.hpp"
#include "infcom/graph.hpp"

namespace infcom {

// Canonical text form of a result: one line per community with rank,
// keynode label and sorted member labels.  Two runs agree iff these agree.
std::string canonical_result(const WeightedGraph& g, std::span<const Community> cs);

// FNV-1a 64-bit hash of canonical_result, as fixed-width hex.
std::string result_hash(const WeightedGraph& g, std::span<const Community> cs);

}  // namespace infcom
