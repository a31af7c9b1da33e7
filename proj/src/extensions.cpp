#include "infcom/extensions.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "infcom/baselines.hpp"

namespace infcom {
namespace {

std::uint64_t next_target(std::uint64_t size, double delta) {
  const auto scaled =
      static_cast<std::uint64_t>(std::ceil(delta * static_cast<double>(size)));
  return std::max(size + 1, scaled);
}

void validate_truss(std::uint32_t gamma) {
  if (gamma < 2) throw std::invalid_argument("truss variant needs gamma >= 2");
}

}  // namespace

KeyCvs count_ic_noncontainment(PrefixSubgraph& sub, std::uint32_t gamma) {
  const WeightedGraph& g = sub.graph();
  const std::uint32_t len = sub.prefix_len();
  KeyCvs kc;
  kc.prefix_len = len;
  kc.is_key.assign(g.vertex_count(), 0);
  gamma_core(sub, gamma);
  for (VertexId u; (u = sub.min_weight_live()) != kNoVertex;) {
    kc.key_pos.push_back(kc.cvs.size());
    kc.keys.push_back(u);
    kc.is_key[u] = 1;
    const std::size_t start = kc.cvs.size();
    remove_and_cascade(sub, u, gamma, kc.cvs);
    // Isolated group: nothing it removed still touches a live vertex.
    bool iso = true;
    for (std::size_t i = start; iso && i < kc.cvs.size(); ++i) {
      const VertexId v = kc.cvs[i];
      for (VertexId w : g.neighbors_ge(v)) {
        if (sub.live(w)) {
          iso = false;
          break;
        }
      }
      if (!iso) break;
      for (VertexId w : g.neighbors_lt(v)) {
        if (w >= len) break;
        if (sub.live(w)) {
          iso = false;
          break;
        }
      }
    }
    kc.isolated.push_back(iso ? 1 : 0);
  }
  return kc;
}

TopKResult local_search_noncontainment(const WeightedGraph& g, const QueryParams& p) {
  if (p.gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(p.delta > 1.0)) throw std::invalid_argument("delta must be > 1");
  TopKResult res;
  const std::uint32_t n = g.vertex_count();
  if (n == 0) return res;

  PrefixSubgraph sub(g);
  sub.set_prefix(static_cast<std::uint32_t>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(p.k) + p.gamma, n)));
  KeyCvs kc;
  std::uint64_t flagged = 0;
  for (;;) {
    kc = count_ic_noncontainment(sub, p.gamma);
    flagged = static_cast<std::uint64_t>(
        std::count(kc.isolated.begin(), kc.isolated.end(), 1));
    res.trace.iterations.push_back({sub.tau(), sub.prefix_len(), sub.size(), flagged});
    if (flagged >= p.k || sub.prefix_len() >= n) break;
    sub.grow_to_size(next_target(sub.size(), p.delta));
  }

  for (std::size_t i = kc.keys.size(); i-- > 0 && res.communities.size() < p.k;) {
    if (!kc.isolated[i]) continue;
    Community c;
    c.keynode = kc.keys[i];
    c.influence = g.weight(c.keynode);
    c.rank = static_cast<std::uint32_t>(res.communities.size()) + 1;
    auto grp = kc.group(i);
    c.group.assign(grp.begin(), grp.end());
    c.members.assign(grp.begin(), grp.end());
    std::sort(c.members.begin(), c.members.end());
    res.communities.push_back(std::move(c));
  }
  res.complete = flagged >= p.k;
  res.total_in_window = flagged;
  return res;
}

TrussSubgraph::TrussSubgraph(const WeightedGraph& g, std::uint32_t prefix_len)
    : g_(&g),
      prefix_len_(std::min(prefix_len, g.vertex_count())),
      cursor_(prefix_len_) {
  const std::uint32_t len = prefix_len_;
  // Window edges: every ge-neighbor pair, id order (heavier endpoint first).
  std::vector<std::uint64_t> deg(len + 1, 0);
  for (std::uint32_t v = 0; v < len; ++v) {
    for (VertexId u : g.neighbors_ge(v)) {
      eu_.push_back(u);
      ev_.push_back(v);
      ++deg[u + 1];
      ++deg[v + 1];
    }
  }
  const auto m = static_cast<std::uint32_t>(eu_.size());
  live_edges_ = m;
  support_.assign(m, 0);
  edge_live_.assign(m, 1);

  inc_off_.assign(len + 1, 0);
  for (std::uint32_t v = 0; v < len; ++v) inc_off_[v + 1] = inc_off_[v] + deg[v + 1];
  inc_nbr_.resize(2 * static_cast<std::size_t>(m));
  inc_eid_.resize(2 * static_cast<std::size_t>(m));
  std::vector<std::uint64_t> fill(inc_off_.begin(), inc_off_.end() - 1);
  for (std::uint32_t e = 0; e < m; ++e) {
    inc_nbr_[fill[eu_[e]]] = ev_[e];
    inc_eid_[fill[eu_[e]]++] = e;
    inc_nbr_[fill[ev_[e]]] = eu_[e];
    inc_eid_[fill[ev_[e]]++] = e;
  }
  live_deg_.assign(len, 0);
  for (std::uint32_t v = 0; v < len; ++v)
    live_deg_[v] = static_cast<std::uint32_t>(inc_off_[v + 1] - inc_off_[v]);

  mark_.assign(len, 0);
  mark_eid_.assign(len, 0);

  // Triangle supports: enumerate each triangle a < b < c once from its
  // lowest-id corner.
  for (std::uint32_t a = 0; a < len; ++a) {
    ++mark_epoch_;
    for (std::uint64_t i = inc_off_[a]; i < inc_off_[a + 1]; ++i) {
      if (inc_nbr_[i] > a) {
        mark_[inc_nbr_[i]] = mark_epoch_;
        mark_eid_[inc_nbr_[i]] = inc_eid_[i];
      }
    }
    for (std::uint64_t i = inc_off_[a]; i < inc_off_[a + 1]; ++i) {
      const VertexId b = inc_nbr_[i];
      if (b <= a) continue;
      const std::uint32_t e_ab = inc_eid_[i];
      for (std::uint64_t j = inc_off_[b]; j < inc_off_[b + 1]; ++j) {
        const VertexId c = inc_nbr_[j];
        if (c <= b || mark_[c] != mark_epoch_) continue;
        ++support_[e_ab];
        ++support_[inc_eid_[j]];
        ++support_[mark_eid_[c]];
      }
    }
  }
}

void TrussSubgraph::peel_queue(std::uint32_t need, std::vector<std::uint32_t>& queue,
                               EdgeKeyCvs* out, std::vector<Edge>* removed) {
  std::size_t head = 0;
  while (head < queue.size()) {
    const std::uint32_t e = queue[head++];
    if (!edge_live_[e]) continue;
    const VertexId a = eu_[e], b = ev_[e];
    ++mark_epoch_;
    for (std::uint64_t i = inc_off_[a]; i < inc_off_[a + 1]; ++i) {
      if (edge_live_[inc_eid_[i]]) {
        mark_[inc_nbr_[i]] = mark_epoch_;
        mark_eid_[inc_nbr_[i]] = inc_eid_[i];
      }
    }
    for (std::uint64_t i = inc_off_[b]; i < inc_off_[b + 1]; ++i) {
      const VertexId w = inc_nbr_[i];
      const std::uint32_t e_bw = inc_eid_[i];
      if (!edge_live_[e_bw] || mark_[w] != mark_epoch_) continue;
      const std::uint32_t partners[2] = {mark_eid_[w], e_bw};
      for (const std::uint32_t pe : partners) {
        if (support_[pe] == need) queue.push_back(pe);
        assert(support_[pe] > 0);
        --support_[pe];
      }
    }
    edge_live_[e] = 0;
    --live_edges_;
    --live_deg_[a];
    --live_deg_[b];
    if (out) {
      out->cvs_edges.emplace_back(a, b);
      out->support_at_removal.push_back(support_[e]);
    }
    if (removed) removed->emplace_back(a, b);
  }
  queue.clear();
}

void TrussSubgraph::reduce(std::uint32_t gamma, std::vector<Edge>* removed) {
  validate_truss(gamma);
  const std::uint32_t need = gamma - 2;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t e = 0; e < support_.size(); ++e)
    if (edge_live_[e] && support_[e] < need) queue.push_back(e);
  peel_queue(need, queue, nullptr, removed);
}

std::vector<Edge> TrussSubgraph::live_edges() const {
  std::vector<Edge> out;
  for (std::uint32_t e = 0; e < edge_live_.size(); ++e)
    if (edge_live_[e]) out.emplace_back(eu_[e], ev_[e]);
  return out;
}

VertexId TrussSubgraph::min_weight_live() {
  while (cursor_ > 0 && live_deg_[cursor_ - 1] == 0) --cursor_;
  return cursor_ == 0 ? kNoVertex : cursor_ - 1;
}

void TrussSubgraph::remove_vertex_edges(VertexId u, std::uint32_t gamma,
                                        EdgeKeyCvs& out) {
  validate_truss(gamma);
  std::vector<std::uint32_t> queue;
  for (std::uint64_t i = inc_off_[u]; i < inc_off_[u + 1]; ++i)
    if (edge_live_[inc_eid_[i]]) queue.push_back(inc_eid_[i]);
  peel_queue(gamma - 2, queue, &out, nullptr);
}

std::vector<VertexId> TrussSubgraph::live_component(VertexId u) const {
  std::vector<VertexId> out{u};
  std::vector<std::uint8_t> seen(prefix_len_, 0);
  seen[u] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const VertexId v = out[head];
    for (std::uint64_t i = inc_off_[v]; i < inc_off_[v + 1]; ++i) {
      const VertexId w = inc_nbr_[i];
      if (edge_live_[inc_eid_[i]] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TrussSubgraph gamma_truss(const PrefixSubgraph& sub, std::uint32_t gamma,
                          std::vector<Edge>* removed) {
  TrussSubgraph ts(sub.graph(), sub.prefix_len());
  ts.reduce(gamma, removed);
  return ts;
}

EdgeKeyCvs count_icc_truss(const WeightedGraph& g, std::uint32_t prefix_len,
                           std::uint32_t gamma) {
  validate_truss(gamma);
  TrussSubgraph ts(g, prefix_len);
  ts.reduce(gamma);
  EdgeKeyCvs out;
  out.prefix_len = ts.prefix_len();
  for (VertexId u; (u = ts.min_weight_live()) != kNoVertex;) {
    out.key_pos.push_back(out.cvs_edges.size());
    out.keys.push_back(u);
    ts.remove_vertex_edges(u, gamma, out);
  }
  return out;
}

std::vector<Community> enum_icc_truss(const WeightedGraph& g, const EdgeKeyCvs& ekc,
                                      std::size_t k) {
  if (k == 0) throw std::invalid_argument("enum_icc_truss: k must be >= 1");
  const std::uint32_t n = g.vertex_count();
  const std::size_t take = std::min(k, ekc.keys.size());

  std::vector<VertexId> parent(n, kNoVertex);
  auto find = [&](VertexId v) {
    VertexId root = v;
    while (parent[root] != root) root = parent[root];
    while (parent[v] != root) {
      VertexId next = parent[v];
      parent[v] = root;
      v = next;
    }
    return root;
  };

  struct Node {
    std::span<const Edge> edges;
    std::vector<VertexId> children;
  };
  std::vector<std::uint32_t> slot(n, 0);
  std::vector<Node> nodes;

  for (std::size_t i = ekc.keys.size(); i-- > ekc.keys.size() - take;) {
    const VertexId u = ekc.keys[i];
    slot[u] = static_cast<std::uint32_t>(nodes.size()) + 1;
    nodes.push_back({ekc.group(i), {}});
    Node& nd = nodes.back();
    for (const auto& [a, b] : nd.edges) {
      for (const VertexId x : {a, b}) {
        if (parent[x] == kNoVertex) {
          parent[x] = u;
          continue;
        }
        const VertexId r = find(x);
        if (r == u) continue;
        nd.children.push_back(r);
        parent[r] = u;
      }
    }
    // u roots itself even if its group is empty of fresh vertices.
    assert(parent[u] != kNoVertex && find(u) == u);
  }

  std::vector<Community> out;
  out.reserve(take);
  std::vector<VertexId> stack;
  for (std::size_t i = ekc.keys.size(); i-- > ekc.keys.size() - take;) {
    const VertexId u = ekc.keys[i];
    Community c;
    c.keynode = u;
    c.influence = g.weight(u);
    c.rank = static_cast<std::uint32_t>(out.size()) + 1;
    const Node& own = nodes[slot[u] - 1];
    c.children.assign(own.children.begin(), own.children.end());
    stack.assign(1, u);
    while (!stack.empty()) {
      const Node& nd = nodes[slot[stack.back()] - 1];
      stack.pop_back();
      for (const auto& [a, b] : nd.edges) {
        c.members.push_back(a);
        c.members.push_back(b);
      }
      stack.insert(stack.end(), nd.children.begin(), nd.children.end());
    }
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

TopKResult local_search_truss(const WeightedGraph& g, const QueryParams& p) {
  validate_truss(p.gamma);
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(p.delta > 1.0)) throw std::invalid_argument("delta must be > 1");
  TopKResult res;
  const std::uint32_t n = g.vertex_count();
  if (n == 0) return res;

  auto len = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(p.k) + p.gamma, n));
  EdgeKeyCvs ekc;
  for (;;) {
    ekc = count_icc_truss(g, len, p.gamma);
    res.trace.iterations.push_back(
        {g.weight(len - 1), len, g.prefix_size(len), ekc.count()});
    if (ekc.count() >= p.k || len >= n) break;
    const std::uint64_t target = next_target(g.prefix_size(len), p.delta);
    while (len < n && g.prefix_size(len) < target) ++len;
  }
  res.communities = enum_icc_truss(g, ekc, p.k);
  res.complete = ekc.count() >= p.k;
  res.total_in_window = ekc.count();
  return res;
}

std::vector<Community> truss_oracle(const WeightedGraph& g, std::uint32_t gamma,
                                    std::uint32_t max_n) {
  validate_truss(gamma);
  const std::uint32_t n = g.vertex_count();
  if (n > max_n)
    throw OracleBoundExceeded("truss oracle refuses graphs with more than " +
                              std::to_string(max_n) + " vertices (got " +
                              std::to_string(n) + ")");
  std::vector<Community> out;
  for (VertexId u = n; u-- > 0;) {
    TrussSubgraph ts(g, u + 1);
    ts.reduce(gamma);
    if (!ts.vertex_live(u)) continue;
    Community c;
    c.keynode = u;
    c.influence = g.weight(u);
    c.members = ts.live_component(u);
    out.push_back(std::move(c));
  }
  std::reverse(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].rank = static_cast<std::uint32_t>(i) + 1;
  return out;
}

}  // namespace infcom
