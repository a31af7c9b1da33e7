#include "infcom/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infcom {
namespace {

void validate(std::uint32_t gamma, double delta) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (!(delta > 1.0)) throw std::invalid_argument("delta must be > 1");
}

std::uint64_t next_target(std::uint64_t size, double delta) {
  const auto scaled =
      static_cast<std::uint64_t>(std::ceil(delta * static_cast<double>(size)));
  return std::max(size + 1, scaled);
}

}  // namespace

double initial_tau(const WeightedGraph& g, std::uint32_t gamma, std::uint32_t k) {
  return g.kth_largest_weight(k + gamma);
}

TopKResult local_search(const WeightedGraph& g, const QueryParams& p) {
  validate(p.gamma, p.delta);
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
  TopKResult res;
  const std::uint32_t n = g.vertex_count();
  if (n == 0) return res;

  PrefixSubgraph sub(g);
  const std::uint64_t first =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(p.k) + p.gamma, n);
  sub.set_prefix(static_cast<std::uint32_t>(first));
  KeyCvs kc = count_ic(sub, p.gamma);
  res.trace.iterations.push_back({sub.tau(), sub.prefix_len(), sub.size(), kc.count()});
  while (kc.count() < p.k && sub.prefix_len() < n) {
    sub.grow_to_size(next_target(sub.size(), p.delta));
    kc = count_ic(sub, p.gamma);
    res.trace.iterations.push_back(
        {sub.tau(), sub.prefix_len(), sub.size(), kc.count()});
  }

  CommunityTree tree = enum_ic(g, kc, p.k);
  res.communities = materialize(g, tree, kc, p.k);
  res.complete = kc.count() >= p.k;
  res.total_in_window = kc.count();
  return res;
}

KeyCvs construct_cvs(PrefixSubgraph& sub, std::uint32_t gamma, std::uint32_t stop_len) {
  KeyCvs kc;
  kc.prefix_len = sub.prefix_len();
  kc.is_key.assign(sub.graph().vertex_count(), 0);
  gamma_core(sub, gamma);
  for (VertexId u; (u = sub.min_weight_live()) != kNoVertex;) {
    if (u < stop_len) break;  // lightest live vertex is in the previous window
    kc.key_pos.push_back(kc.cvs.size());
    kc.keys.push_back(u);
    kc.is_key[u] = 1;
    remove_and_cascade(sub, u, gamma, kc.cvs);
  }
  return kc;
}

SearchTrace local_search_progressive(const WeightedGraph& g, std::uint32_t gamma,
                                     double delta,
                                     const std::function<bool(Community&&)>& sink) {
  validate(gamma, delta);
  SearchTrace trace;
  const std::uint32_t n = g.vertex_count();
  if (n == 0) return trace;

  PrefixSubgraph sub(g);
  CommunityTree tree(n);
  sub.set_prefix(std::min(gamma + 1, n));
  std::uint32_t prev_len = 0;
  std::uint32_t emitted = 0;
  bool stopped = false;
  while (true) {
    const std::uint32_t len = sub.prefix_len();
    KeyCvs frag = construct_cvs(sub, gamma, prev_len);
    // New keynodes are all lighter than anything in the previous window, so
    // emitting them heaviest-first keeps the whole stream decreasing.
    for (std::size_t i = frag.keys.size(); i-- > 0;) {
      const VertexId u = frag.keys[i];
      tree.absorb_group(g, len, u, frag.group(i));
      Community c;
      c.keynode = u;
      c.influence = g.weight(u);
      c.rank = ++emitted;
      auto grp = tree.group(u);
      c.group.assign(grp.begin(), grp.end());
      auto ch = tree.children_of(u);
      c.children.assign(ch.begin(), ch.end());
      c.members = tree.flatten(u);
      std::sort(c.members.begin(), c.members.end());
      if (!sink(std::move(c))) {
        stopped = true;
        break;
      }
    }
    trace.iterations.push_back({sub.tau(), len, sub.size(), emitted});
    if (stopped || len >= n) break;
    prev_len = len;
    sub.grow_to_size(next_target(sub.size(), delta));
  }
  return trace;
}

}  // namespace infcom
