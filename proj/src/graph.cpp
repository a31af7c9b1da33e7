#include "infcom/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace infcom {

std::optional<VertexId> WeightedGraph::id_of(std::string_view label) const {
  auto it = label_to_id_.find(std::string(label));
  if (it == label_to_id_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t WeightedGraph::prefix_len_for_weight(double tau) const {
  // weight_ is non-increasing; find the first position with weight < tau.
  auto it = std::lower_bound(weight_.begin(), weight_.end(), tau,
                             [](double w, double t) { return w >= t; });
  return static_cast<std::uint32_t>(it - weight_.begin());
}

double WeightedGraph::kth_largest_weight(std::uint32_t k) const {
  if (n_ == 0) throw std::invalid_argument("kth_largest_weight on empty graph");
  if (k < 1) throw std::invalid_argument("kth_largest_weight: k must be >= 1");
  return weight_[std::min(k, n_) - 1];
}

WeightedGraph WeightedGraph::build(
    std::vector<std::string> labels, std::vector<double> weights,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  const auto n = static_cast<std::uint32_t>(labels.size());
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!std::isfinite(weights[v]))
      throw std::runtime_error("non-finite weight for vertex '" + labels[v] + "'");
  }

  // Rank vertices by decreasing weight, ties by label, and remap ids so that
  // id == rank.
  std::vector<std::uint32_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return labels[a] < labels[b];
  });
  std::vector<VertexId> new_id(n);
  for (std::uint32_t r = 0; r < n; ++r) new_id[by_rank[r]] = r;

  WeightedGraph g;
  g.n_ = n;
  g.weight_.resize(n);
  g.label_.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    g.weight_[r] = weights[by_rank[r]];
    g.label_[r] = std::move(labels[by_rank[r]]);
  }
  g.label_to_id_.reserve(n);
  for (std::uint32_t r = 0; r < n; ++r) g.label_to_id_.emplace(g.label_[r], r);

  // Normalize edges to (hi-weight, lo-weight) id pairs, drop self-loops,
  // dedupe.
  std::uint64_t self_loops = 0;
  std::vector<std::pair<VertexId, VertexId>> norm;
  norm.reserve(edges.size());
  for (auto [a, b] : edges) {
    VertexId u = new_id[a], v = new_id[b];
    if (u == v) {
      ++self_loops;
      continue;
    }
    if (u > v) std::swap(u, v);
    norm.emplace_back(u, v);
  }
  std::sort(norm.begin(), norm.end());
  auto last = std::unique(norm.begin(), norm.end());
  g.duplicates_dropped_ = static_cast<std::uint64_t>(norm.end() - last);
  norm.erase(last, norm.end());
  g.self_loops_dropped_ = self_loops;
  g.m_ = norm.size();

  // CSR, each edge in both endpoint lists, sorted ascending by id.  Because
  // ids equal ranks, the ge half of a list is exactly the part below the
  // vertex's own id.
  std::vector<std::uint64_t> deg(n + 1, 0);
  for (auto [u, v] : norm) {
    ++deg[u + 1];
    ++deg[v + 1];
  }
  g.adj_off_.assign(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) g.adj_off_[v + 1] = g.adj_off_[v] + deg[v + 1];
  g.adj_.resize(2 * g.m_);
  std::vector<std::uint64_t> fill(g.adj_off_.begin(), g.adj_off_.end() - 1);
  for (auto [u, v] : norm) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (std::uint32_t v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_off_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_off_[v + 1]));
  g.adj_split_.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto begin = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_off_[v]);
    auto end = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_off_[v + 1]);
    g.adj_split_[v] =
        static_cast<std::uint64_t>(std::lower_bound(begin, end, v) - g.adj_.begin());
  }

  // prefix_size_[len] = len + edges induced by the first len vertices; each
  // vertex contributes 1 plus its ge-degree when it joins the window.
  g.prefix_size_.assign(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint64_t ge = g.adj_split_[v] - g.adj_off_[v];
    g.prefix_size_[v + 1] = g.prefix_size_[v] + 1 + ge;
  }
  return g;
}

WeightedGraph ingest(const std::vector<std::pair<std::string, std::string>>& edges,
                     const std::vector<std::pair<std::string, double>>& weights) {
  std::vector<std::string> labels;
  std::vector<double> w;
  std::unordered_map<std::string, std::uint32_t> index;
  labels.reserve(weights.size());
  w.reserve(weights.size());
  for (const auto& [label, weight] : weights) {
    auto [it, fresh] = index.emplace(label, static_cast<std::uint32_t>(labels.size()));
    if (!fresh) throw std::runtime_error("duplicate weight entry for vertex '" + label + "'");
    labels.push_back(label);
    w.push_back(weight);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  e.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    if (ia == index.end()) throw std::runtime_error("no weight for vertex '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw std::runtime_error("no weight for vertex '" + b + "'");
    e.emplace_back(ia->second, ib->second);
  }
  return WeightedGraph::build(std::move(labels), std::move(w), std::move(e));
}

PrefixSubgraph::PrefixSubgraph(const WeightedGraph& g)
    : g_(&g), live_degree_(g.vertex_count(), 0), removed_(g.vertex_count(), 1) {}

void PrefixSubgraph::set_prefix(std::uint32_t len) {
  prefix_len_ = std::min(len, g_->vertex_count());
  reset_live();
}

std::uint32_t PrefixSubgraph::grow_to_size(std::uint64_t target) {
  const std::uint32_t n = g_->vertex_count();
  std::uint32_t len = prefix_len_;
  while (len < n && g_->prefix_size(len) < target) ++len;
  prefix_len_ = len;
  reset_live();
  return prefix_len_;
}

void PrefixSubgraph::reset_live() {
  for (std::uint32_t v = 0; v < prefix_len_; ++v) {
    removed_[v] = 0;
    live_degree_[v] = 0;
  }
  for (std::uint32_t v = 0; v < prefix_len_; ++v) {
    for (VertexId u : g_->neighbors_ge(v)) {
      ++live_degree_[u];
      ++live_degree_[v];
    }
  }
  live_count_ = prefix_len_;
  cursor_ = prefix_len_;
}

VertexId PrefixSubgraph::min_weight_live() {
  while (cursor_ > 0 && removed_[cursor_ - 1]) --cursor_;
  return cursor_ == 0 ? kNoVertex : cursor_ - 1;
}

}  // namespace infcom
