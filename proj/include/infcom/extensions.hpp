#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "infcom/core.hpp"
#include "infcom/graph.hpp"
#include "infcom/search.hpp"

namespace infcom {

// --- non-containment communities ---------------------------------------
//
// A keynode is "isolated" when, after its removal cascade, none of the
// cascaded vertices has a surviving neighbor.  Such a group is a community
// that contains no other community, and the groups of isolated keynodes are
// pairwise disjoint.

// count_ic plus the isolated flag per keynode (KeyCvs::isolated).
KeyCvs count_ic_noncontainment(PrefixSubgraph& sub, std::uint32_t gamma);

// Threshold-growth search for the k heaviest isolated keynodes; community
// members are exactly the keynode's own group.
TopKResult local_search_noncontainment(const WeightedGraph& g, const QueryParams& p);

// --- gamma-truss communities --------------------------------------------
//
// Edge-level analogue: a gamma-truss keeps every edge that closes at least
// gamma-2 triangles (within the kept edges) and drops isolated vertices.
// Peeling deletes the lightest incident vertex's edges with support
// cascades; groups/communities are edge sets.

using Edge = std::pair<VertexId, VertexId>;  // (heavier, lighter) = (lo id, hi id)

struct EdgeKeyCvs {
  std::vector<VertexId> keys;
  std::vector<std::size_t> key_pos;        // position of keys[i] in cvs_edges
  std::vector<Edge> cvs_edges;             // surviving-truss edges, removal order
  std::vector<std::uint32_t> support_at_removal;  // parallel to cvs_edges
  std::uint32_t prefix_len = 0;

  std::size_t count() const { return keys.size(); }
  std::span<const Edge> group(std::size_t i) const {
    std::size_t end = i + 1 < keys.size() ? key_pos[i + 1] : cvs_edges.size();
    return {cvs_edges.data() + key_pos[i], cvs_edges.data() + end};
  }
};

// Edge-level peeling state over a weight-order prefix of g.
class TrussSubgraph {
 public:
  TrussSubgraph(const WeightedGraph& g, std::uint32_t prefix_len);

  // Delete edges in fewer than gamma-2 triangles until a fixpoint (the
  // gamma-truss).  Deleted edges go to removed if given.  gamma >= 2.
  void reduce(std::uint32_t gamma, std::vector<Edge>* removed = nullptr);

  std::uint32_t prefix_len() const { return prefix_len_; }
  std::uint64_t live_edge_count() const { return live_edges_; }
  std::uint32_t live_degree(VertexId v) const { return live_deg_[v]; }
  bool vertex_live(VertexId v) const { return v < prefix_len_ && live_deg_[v] > 0; }
  std::vector<Edge> live_edges() const;

  // Lightest vertex with a live edge, or kNoVertex.
  VertexId min_weight_live();

  // Delete every live edge incident to u, cascading support drops; removed
  // edges and their support at removal time are appended to out.
  void remove_vertex_edges(VertexId u, std::uint32_t gamma, EdgeKeyCvs& out);

  // Connected component of u over live edges: sorted vertex set.
  std::vector<VertexId> live_component(VertexId u) const;

 private:
  // Drain the cascade queue: delete each edge, decrement the two partner
  // edges of every live triangle through it, enqueue partners crossing
  // below need = gamma-2.  Deleted edges go to out and/or removed.
  void peel_queue(std::uint32_t need, std::vector<std::uint32_t>& queue,
                  EdgeKeyCvs* out, std::vector<Edge>* removed);

  const WeightedGraph* g_;
  std::uint32_t prefix_len_;
  std::uint64_t live_edges_ = 0;
  std::uint32_t cursor_;
  std::vector<VertexId> eu_, ev_;            // edge endpoints, eu < ev
  std::vector<std::uint32_t> support_;
  std::vector<std::uint8_t> edge_live_;
  std::vector<std::uint32_t> live_deg_;      // live incident edges per vertex
  std::vector<std::uint64_t> inc_off_;       // incidence CSR over window vertices
  std::vector<VertexId> inc_nbr_;
  std::vector<std::uint32_t> inc_eid_;
  std::vector<std::uint32_t> mark_;          // stamped partner-edge lookup
  std::uint32_t mark_epoch_ = 0;
  std::vector<std::uint32_t> mark_eid_;
};

// Reduce the window of sub to its gamma-truss and return the edge-level
// state (sub itself only supplies graph and window).
TrussSubgraph gamma_truss(const PrefixSubgraph& sub, std::uint32_t gamma,
                          std::vector<Edge>* removed = nullptr);

// Peel the window: reduce to the gamma-truss, then repeatedly delete the
// lightest live vertex's edges.  Keynode count equals community count.
EdgeKeyCvs count_icc_truss(const WeightedGraph& g, std::uint32_t prefix_len,
                           std::uint32_t gamma);

// Materialize the last min(k, count) keynodes' communities heaviest-first;
// members are the endpoints of the community's edges, children link nested
// communities.
std::vector<Community> enum_icc_truss(const WeightedGraph& g, const EdgeKeyCvs& ekc,
                                      std::size_t k);

// Threshold-growth top-k for truss communities (growth ratio delta).
TopKResult local_search_truss(const WeightedGraph& g, const QueryParams& p);

// Definition-direct reference, like oracle_enumerate but for trusses: for
// every vertex u, lightest first, reduce the window of vertices at least as
// heavy as u to its gamma-truss; if u keeps an edge, its component is the
// community with influence w(u).
std::vector<Community> truss_oracle(const WeightedGraph& g, std::uint32_t gamma,
                                    std::uint32_t max_n = 12);

}  // namespace infcom
