#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace infcom {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Vertex ids coincide with positions in the weight order: id 0 is the
// heaviest vertex, id n-1 the lightest.  Ties in raw weight are broken by
// the external label (lexicographic), so the order is a strict total order
// and every weight comparison below can be done on ids alone.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  double weight(VertexId v) const { return weight_[v]; }
  const std::string& label(VertexId v) const { return label_[v]; }
  std::optional<VertexId> id_of(std::string_view label) const;

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(adj_off_[v + 1] - adj_off_[v]);
  }
  // Neighbors sorted by increasing id.  The ge half holds neighbors with
  // higher tie-broken weight (smaller id), the lt half the rest.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + adj_off_[v], adj_.data() + adj_off_[v + 1]};
  }
  std::span<const VertexId> neighbors_ge(VertexId v) const {
    return {adj_.data() + adj_off_[v], adj_.data() + adj_split_[v]};
  }
  std::span<const VertexId> neighbors_lt(VertexId v) const {
    return {adj_.data() + adj_split_[v], adj_.data() + adj_off_[v + 1]};
  }

  // Number of vertices with raw weight >= tau (all tied vertices included).
  std::uint32_t prefix_len_for_weight(double tau) const;
  // k >= 1; k > n clamps to the minimum weight.
  double kth_largest_weight(std::uint32_t k) const;
  // |V| + |E| of the subgraph induced by the first len vertices.
  std::uint64_t prefix_size(std::uint32_t len) const { return prefix_size_[len]; }

  std::uint64_t self_loops_dropped() const { return self_loops_dropped_; }
  std::uint64_t duplicates_dropped() const { return duplicates_dropped_; }

  // edges are pairs of dense indices into labels/weights (not yet ordered).
  static WeightedGraph build(std::vector<std::string> labels,
                             std::vector<double> weights,
                             std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

 private:
  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<double> weight_;            // by id, non-increasing
  std::vector<std::string> label_;        // by id
  std::unordered_map<std::string, VertexId> label_to_id_;
  std::vector<std::uint64_t> adj_off_;    // n+1
  std::vector<std::uint64_t> adj_split_;  // n, absolute offset where lt half begins
  std::vector<VertexId> adj_;             // 2m
  std::vector<std::uint64_t> prefix_size_;  // n+1, prefix_size_[len] = len + induced edges
  std::uint64_t self_loops_dropped_ = 0;
  std::uint64_t duplicates_dropped_ = 0;
};

// Build a graph from labelled edges and a label -> weight map.  Every label
// mentioned by an edge must have a weight entry; weights must be finite.
// Self-loops and duplicate edges are dropped (counted on the result).
WeightedGraph ingest(const std::vector<std::pair<std::string, std::string>>& edges,
                     const std::vector<std::pair<std::string, double>>& weights);

// A prefix window over the weight order plus peeling state for the induced
// subgraph.  set_prefix/grow_to_size reset the peeling state; the peeling
// routines in core.hpp then consume it destructively.
class PrefixSubgraph {
 public:
  explicit PrefixSubgraph(const WeightedGraph& g);

  const WeightedGraph& graph() const { return *g_; }

  void set_prefix(std::uint32_t len);
  // Extend the window until |V|+|E| >= target (or the whole graph) and
  // return the new prefix length.  The window never shrinks.
  std::uint32_t grow_to_size(std::uint64_t target);

  std::uint32_t prefix_len() const { return prefix_len_; }
  std::uint64_t size() const { return g_->prefix_size(prefix_len_); }
  // Weight of the lightest vertex in the window.
  double tau() const { return g_->weight(prefix_len_ - 1); }

  bool in_window(VertexId v) const { return v < prefix_len_; }
  bool live(VertexId v) const { return v < prefix_len_ && !removed_[v]; }
  std::uint32_t live_degree(VertexId v) const { return live_degree_[v]; }
  std::uint32_t live_count() const { return live_count_; }

  // Lightest live vertex, or kNoVertex if none.  Amortized O(1): the cursor
  // only moves toward heavier vertices, which is the order peeling asks in.
  VertexId min_weight_live();

  // Low-level mutators used by the peeling routines.
  void mark_removed(VertexId v) {
    removed_[v] = 1;
    --live_count_;
  }
  void dec_degree(VertexId v) { --live_degree_[v]; }

 private:
  void reset_live();

  const WeightedGraph* g_;
  std::uint32_t prefix_len_ = 0;
  std::uint32_t live_count_ = 0;
  std::uint32_t cursor_ = 0;  // scan position for min_weight_live
  std::vector<std::uint32_t> live_degree_;
  std::vector<std::uint8_t> removed_;
};

}  // namespace infcom
