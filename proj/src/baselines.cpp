#include "infcom/baselines.hpp"

#include <algorithm>
#include <string>

namespace infcom {
namespace {

// Collect the connected component of u in the live subgraph.  The stamp
// array avoids clearing a visited bitmap between calls.
void live_component(const PrefixSubgraph& sub, VertexId u, std::vector<VertexId>& out,
                    std::vector<std::uint32_t>& stamp, std::uint32_t epoch) {
  const WeightedGraph& g = sub.graph();
  const std::uint32_t len = sub.prefix_len();
  out.clear();
  out.push_back(u);
  stamp[u] = epoch;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const VertexId v = out[head];
    auto visit = [&](VertexId w) {
      if (stamp[w] != epoch && sub.live(w)) {
        stamp[w] = epoch;
        out.push_back(w);
      }
    };
    for (VertexId w : g.neighbors_ge(v)) visit(w);
    for (VertexId w : g.neighbors_lt(v)) {
      if (w >= len) break;
      visit(w);
    }
  }
}

Community make_flat(const WeightedGraph& g, VertexId keynode,
                    std::vector<VertexId> members) {
  Community c;
  c.keynode = keynode;
  c.influence = g.weight(keynode);
  std::sort(members.begin(), members.end());
  c.members = std::move(members);
  return c;
}

// Shared driver: peel the whole graph, snapshotting the component of the
// keynode for every peel step >= first_snapshot.
std::vector<Community> peel_with_snapshots(const WeightedGraph& g, std::uint32_t gamma,
                                           std::size_t k, std::size_t first_snapshot) {
  const std::uint32_t n = g.vertex_count();
  k = std::min<std::size_t>(k, std::max<std::uint32_t>(n, 1));
  PrefixSubgraph sub(g);
  sub.set_prefix(n);
  gamma_core(sub, gamma);

  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<VertexId> comp;
  std::vector<VertexId> scratch;
  // Ring of the last k snapshots so memory stays bounded by k components.
  std::vector<Community> ring(k);
  std::size_t total = 0;
  for (VertexId u; (u = sub.min_weight_live()) != kNoVertex; ++total) {
    if (total >= first_snapshot) {
      live_component(sub, u, comp, stamp, ++epoch);
      ring[total % k] = make_flat(g, u, comp);
    }
    scratch.clear();
    remove_and_cascade(sub, u, gamma, scratch);
  }

  std::vector<Community> out;
  const std::size_t take = std::min(k, total);
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    Community c = std::move(ring[(total - 1 - i) % k]);
    c.rank = static_cast<std::uint32_t>(i) + 1;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Community> online_all(const WeightedGraph& g, std::uint32_t gamma,
                                  std::size_t k) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return peel_with_snapshots(g, gamma, k, 0);
}

std::vector<Community> forward_search(const WeightedGraph& g, std::uint32_t gamma,
                                      std::size_t k) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  // Counting pass: keynode count without component snapshots.
  PrefixSubgraph sub(g);
  sub.set_prefix(g.vertex_count());
  gamma_core(sub, gamma);
  std::size_t total = 0;
  std::vector<VertexId> scratch;
  for (VertexId u; (u = sub.min_weight_live()) != kNoVertex; ++total) {
    scratch.clear();
    remove_and_cascade(sub, u, gamma, scratch);
  }
  const std::size_t first = total > k ? total - k : 0;
  return peel_with_snapshots(g, gamma, k, first);
}

std::vector<Community> oracle_enumerate(const WeightedGraph& g, std::uint32_t gamma,
                                        std::uint32_t max_n) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  const std::uint32_t n = g.vertex_count();
  if (n > max_n)
    throw OracleBoundExceeded("oracle refuses graphs with more than " +
                              std::to_string(max_n) + " vertices (got " +
                              std::to_string(n) + ")");
  PrefixSubgraph sub(g);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<VertexId> comp;
  std::vector<Community> out;
  // Lightest vertex first, so the result ends up heaviest-last; reversed
  // below.  Vertex ids order by decreasing weight, hence u+1 is exactly the
  // window of vertices at least as heavy as u.
  for (VertexId u = n; u-- > 0;) {
    sub.set_prefix(u + 1);
    gamma_core(sub, gamma);
    if (!sub.live(u)) continue;
    live_component(sub, u, comp, stamp, ++epoch);
    out.push_back(make_flat(g, u, comp));
  }
  std::reverse(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].rank = static_cast<std::uint32_t>(i) + 1;
  return out;
}

}  // namespace infcom
