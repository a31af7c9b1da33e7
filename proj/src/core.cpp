#include "infcom/core.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace infcom {
namespace {

// Shared cascade step: scan v's live neighbors inside the window, push the
// ones whose degree is about to drop below gamma, decrement, then delete v.
// A vertex can enter the stack at most once: the push test fires only on the
// degree gamma -> gamma-1 transition (seeds start below gamma and the
// keynode is pushed before any of its degree changes matter).  LIFO order
// makes a cascade walk away from its seed in increasing weight.
template <typename Sink>
void cascade(PrefixSubgraph& sub, std::uint32_t gamma, std::vector<VertexId>& queue,
             Sink&& emit) {
  const WeightedGraph& g = sub.graph();
  const std::uint32_t len = sub.prefix_len();
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    assert(sub.live(v));
    auto visit = [&](VertexId w) {
      if (!sub.live(w)) return;
      if (sub.live_degree(w) == gamma) queue.push_back(w);
      sub.dec_degree(w);
    };
    for (VertexId w : g.neighbors_ge(v)) visit(w);
    for (VertexId w : g.neighbors_lt(v)) {
      if (w >= len) break;
      visit(w);
    }
    sub.mark_removed(v);
    emit(v);
  }
}

}  // namespace

void gamma_core(PrefixSubgraph& sub, std::uint32_t gamma,
                std::vector<VertexId>* peel_order) {
  std::vector<VertexId> queue;
  for (std::uint32_t v = 0; v < sub.prefix_len(); ++v)
    if (sub.live(v) && sub.live_degree(v) < gamma) queue.push_back(v);
  cascade(sub, gamma, queue, [&](VertexId v) {
    if (peel_order) peel_order->push_back(v);
  });
}

void remove_and_cascade(PrefixSubgraph& sub, VertexId u, std::uint32_t gamma,
                        std::vector<VertexId>& cvs) {
  std::vector<VertexId> queue{u};
  cascade(sub, gamma, queue, [&](VertexId v) { cvs.push_back(v); });
}

KeyCvs count_ic(PrefixSubgraph& sub, std::uint32_t gamma) {
  KeyCvs kc;
  kc.prefix_len = sub.prefix_len();
  kc.is_key.assign(sub.graph().vertex_count(), 0);
  gamma_core(sub, gamma);
  std::vector<VertexId> queue;
  for (VertexId u; (u = sub.min_weight_live()) != kNoVertex;) {
    kc.key_pos.push_back(kc.cvs.size());
    kc.keys.push_back(u);
    kc.is_key[u] = 1;
    queue.assign(1, u);
    cascade(sub, gamma, queue, [&](VertexId v) { kc.cvs.push_back(v); });
  }
  return kc;
}

VertexId CommunityTree::find(VertexId v) {
  VertexId root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    VertexId next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

void CommunityTree::absorb_group(const WeightedGraph& g, std::uint32_t window_len,
                                 VertexId key, std::span<const VertexId> group) {
  assert(!contains(key));
  slot_[key] = static_cast<std::uint32_t>(nodes_.size()) + 1;
  nodes_.push_back({{group.begin(), group.end()}, {}});
  Node& nd = nodes_.back();
  // The key becomes the union-find root of its group and of every processed
  // community the group touches, so lookups from lighter keys resolve here.
  for (VertexId v : group) parent_[v] = key;
  for (VertexId v : group) {
    auto visit = [&](VertexId w) {
      if (parent_[w] == kNoVertex) return;  // in no processed community
      VertexId r = find(w);
      if (r == key) return;
      nd.children.push_back(r);
      parent_[r] = key;
    };
    for (VertexId w : g.neighbors_ge(v)) visit(w);
    for (VertexId w : g.neighbors_lt(v)) {
      if (w >= window_len) break;
      visit(w);
    }
  }
}

std::vector<VertexId> CommunityTree::flatten(VertexId key) const {
  std::vector<VertexId> out;
  std::vector<VertexId> stack{key};
  while (!stack.empty()) {
    const Node& nd = node(stack.back());
    stack.pop_back();
    out.insert(out.end(), nd.group.begin(), nd.group.end());
    stack.insert(stack.end(), nd.children.begin(), nd.children.end());
  }
  return out;
}

CommunityTree enum_ic(const WeightedGraph& g, const KeyCvs& kc, std::size_t k) {
  if (k == 0) throw std::invalid_argument("enum_ic: k must be >= 1");
  CommunityTree tree(g.vertex_count());
  const std::size_t take = std::min(k, kc.keys.size());
  for (std::size_t i = kc.keys.size(); i-- > kc.keys.size() - take;)
    tree.absorb_group(g, kc.prefix_len, kc.keys[i], kc.group(i));
  return tree;
}

std::vector<Community> materialize(const WeightedGraph& g, const CommunityTree& tree,
                                   const KeyCvs& kc, std::size_t k) {
  const std::size_t take = std::min(k, kc.keys.size());
  std::vector<Community> out;
  out.reserve(take);
  for (std::size_t i = kc.keys.size(); i-- > kc.keys.size() - take;) {
    VertexId u = kc.keys[i];
    Community c;
    c.keynode = u;
    c.influence = g.weight(u);
    c.rank = static_cast<std::uint32_t>(out.size()) + 1;
    auto grp = tree.group(u);
    c.group.assign(grp.begin(), grp.end());
    auto ch = tree.children_of(u);
    c.children.assign(ch.begin(), ch.end());
    c.members = tree.flatten(u);
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace infcom
