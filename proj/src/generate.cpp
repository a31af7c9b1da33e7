#include "infcom/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace infcom {
namespace {

double unit_double(std::mt19937_64& rng) {
  // 53 uniform bits in [0,1); avoids distribution implementation differences.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // bias is irrelevant for test-data generation
}

}  // namespace

GeneratedGraph gen_erdos(std::uint32_t n, double p, std::uint64_t seed) {
  GeneratedGraph gg;
  gg.n = n;
  if (n < 2 || p <= 0) return gg;
  std::mt19937_64 rng(seed);
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p >= 1) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) gg.edges.emplace_back(u, v);
    return gg;
  }
  // Walk the linear pair index with geometric gaps.
  const double log1mp = std::log1p(-p);
  std::uint64_t idx = 0;
  std::uint32_t row = 0;
  std::uint64_t row_base = 0;
  std::uint32_t row_len = n - 1;
  for (;;) {
    const double u = unit_double(rng);
    idx += static_cast<std::uint64_t>(std::floor(std::log1p(-u) / log1mp));
    if (idx >= total) break;
    while (idx >= row_base + row_len) {
      row_base += row_len;
      ++row;
      row_len = n - 1 - row;
    }
    gg.edges.emplace_back(row, row + 1 + static_cast<std::uint32_t>(idx - row_base));
    ++idx;
  }
  return gg;
}

GeneratedGraph gen_powerlaw(std::uint32_t n, std::uint32_t m_per_vertex,
                            std::uint64_t seed) {
  if (m_per_vertex < 1) throw std::invalid_argument("m_per_vertex must be >= 1");
  GeneratedGraph gg;
  gg.n = n;
  const std::uint32_t s = std::min(n, m_per_vertex + 1);
  for (std::uint32_t u = 0; u < s; ++u)
    for (std::uint32_t v = u + 1; v < s; ++v) gg.edges.emplace_back(u, v);
  if (n <= s) return gg;

  std::mt19937_64 rng(seed);
  // Every edge contributes both endpoints; uniform picks from this list are
  // degree-proportional.
  std::vector<std::uint32_t> endpoints;
  endpoints.reserve(2 * (gg.edges.size() + static_cast<std::size_t>(n) * m_per_vertex));
  for (auto [u, v] : gg.edges) {
    endpoints.push_back(u);
    endpoints.push_back(v);
  }
  std::vector<std::uint32_t> picked;
  for (std::uint32_t v = s; v < n; ++v) {
    picked.clear();
    std::uint32_t guard = 0;
    while (picked.size() < m_per_vertex) {
      std::uint32_t t = endpoints[below(rng, endpoints.size())];
      if (++guard > 64 * m_per_vertex) {
        // Dense corner case: fall back to the lowest unused ids.
        for (std::uint32_t c = 0; picked.size() < m_per_vertex && c < v; ++c)
          if (std::find(picked.begin(), picked.end(), c) == picked.end())
            picked.push_back(c);
        break;
      }
      if (std::find(picked.begin(), picked.end(), t) != picked.end()) continue;
      picked.push_back(t);
    }
    for (std::uint32_t t : picked) {
      gg.edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return gg;
}

std::vector<double> random_distinct_weights(std::uint32_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (std::uint32_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[below(rng, i)]);
  std::vector<double> w(n);
  for (std::uint32_t i = 0; i < n; ++i)
    w[i] = static_cast<double>(perm[i] + 1) / static_cast<double>(n);
  return w;
}

WeightedGraph to_weighted(const GeneratedGraph& gg, std::span<const double> weights) {
  if (weights.size() != gg.n)
    throw std::invalid_argument("to_weighted: weight count != vertex count");
  std::vector<std::string> labels(gg.n);
  for (std::uint32_t v = 0; v < gg.n; ++v) labels[v] = std::to_string(v);
  return WeightedGraph::build(std::move(labels),
                              std::vector<double>(weights.begin(), weights.end()),
                              gg.edges);
}

}  // namespace infcom
