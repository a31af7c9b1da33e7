#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infcom/graph.hpp"

namespace infcom {

// Result of a full peeling pass: the keynodes in removal (= increasing
// weight) order and the community-aware vertex sequence.  cvs covers exactly
// the vertices of the gamma-core of the window; the initial core reduction
// itself is not recorded.  Each keynode is immediately followed in cvs by
// the rest of its group (the vertices its removal cascaded).
struct KeyCvs {
  std::vector<VertexId> keys;
  std::vector<std::size_t> key_pos;     // position of keys[i] in cvs
  std::vector<VertexId> cvs;
  std::vector<std::uint8_t> is_key;     // per vertex id
  std::vector<std::uint8_t> isolated;   // per key: group had no surviving neighbor
  std::uint32_t prefix_len = 0;         // window the peel ran on

  std::size_t count() const { return keys.size(); }
  // Group of keys[i]: its cvs segment up to the next keynode (or cvs end).
  std::span<const VertexId> group(std::size_t i) const {
    std::size_t end = i + 1 < keys.size() ? key_pos[i + 1] : cvs.size();
    return {cvs.data() + key_pos[i], cvs.data() + end};
  }
};

// Iteratively delete vertices of live degree < gamma.  The deleted vertices
// go to peel_order if given (heaviest-first seed scan, then cascades).
void gamma_core(PrefixSubgraph& sub, std::uint32_t gamma,
                std::vector<VertexId>* peel_order = nullptr);

// Delete u and cascade deletions so the live subgraph is a gamma-core again;
// every deleted vertex is appended to cvs (u first).  Expects the live
// subgraph to be a gamma-core containing u.
void remove_and_cascade(PrefixSubgraph& sub, VertexId u, std::uint32_t gamma,
                        std::vector<VertexId>& cvs);

// Count the communities of the window: reduce to the gamma-core, then
// repeatedly delete the lightest live vertex (a keynode) with cascade.
// Consumes the live state of sub.
KeyCvs count_ic(PrefixSubgraph& sub, std::uint32_t gamma);

// Nested community forest over the keynodes of a peel.  Communities are
// stored as group + child links; member sets are shared, not copied.
class CommunityTree {
 public:
  explicit CommunityTree(std::uint32_t n) : slot_(n, 0), parent_(n, kNoVertex) {}

  bool contains(VertexId key) const { return key < slot_.size() && slot_[key] != 0; }
  std::span<const VertexId> group(VertexId key) const { return node(key).group; }
  std::span<const VertexId> children_of(VertexId key) const { return node(key).children; }
  // Flat member set: group plus all descendant groups.  Linear in output.
  std::vector<VertexId> flatten(VertexId key) const;

  // Build-side interface (enum_ic and the progressive driver).
  // Processes one keynode group: installs the key in the union-find, scans
  // member neighborhoods inside the window for already-processed communities
  // and links them as children.
  void absorb_group(const WeightedGraph& g, std::uint32_t window_len, VertexId key,
                    std::span<const VertexId> group);

 private:
  struct Node {
    std::vector<VertexId> group;
    std::vector<VertexId> children;
  };
  const Node& node(VertexId key) const { return nodes_[slot_[key] - 1]; }

  VertexId find(VertexId v);

  std::vector<std::uint32_t> slot_;   // per vertex: node index + 1, 0 = none
  std::vector<Node> nodes_;
  // Union-find over vertices; the representative is always the lightest
  // keynode whose community currently contains the vertex, because each
  // absorbed key is installed as the root of everything its group touches.
  std::vector<VertexId> parent_;
};

// One community of the result, in reporting form.
struct Community {
  VertexId keynode = kNoVertex;
  double influence = 0;
  std::uint32_t rank = 0;              // 1-based, decreasing influence
  std::vector<VertexId> members;       // flat, sorted by id
  std::vector<VertexId> group;         // own group (nested view)
  std::vector<VertexId> children;      // child community keynodes
};

// Materialize the top-k communities (all if k >= count) from a peel.
// Processes the last min(k, count) keynodes heaviest-first.
CommunityTree enum_ic(const WeightedGraph& g, const KeyCvs& kc, std::size_t k);

// Ranked community records for the last min(k, count) keynodes of kc,
// decreasing influence.  Member sets flattened from the tree.
std::vector<Community> materialize(const WeightedGraph& g, const CommunityTree& tree,
                                   const KeyCvs& kc, std::size_t k);

}  // namespace infcom
