#include "infcom/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infcom {

std::vector<double> pagerank(std::uint32_t n,
                             std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                             double damping, std::uint32_t max_iters, double tol) {
  if (damping < 0 || damping >= 1) throw std::invalid_argument("damping must be in [0,1)");
  if (n == 0) return {};

  std::vector<std::pair<std::uint32_t, std::uint32_t>> simple;
  simple.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) continue;
    simple.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());

  std::vector<std::uint64_t> off(n + 1, 0);
  for (auto [a, b] : simple) {
    ++off[a + 1];
    ++off[b + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) off[v + 1] += off[v];
  std::vector<std::uint32_t> adj(2 * simple.size());
  std::vector<std::uint64_t> fill(off.begin(), off.end() - 1);
  for (auto [a, b] : simple) {
    adj[fill[a]++] = b;
    adj[fill[b]++] = a;
  }

  std::vector<double> x(n, 1.0 / n), next(n);
  for (std::uint32_t it = 0; it < max_iters; ++it) {
    double dangling = 0;
    for (std::uint32_t v = 0; v < n; ++v)
      if (off[v + 1] == off[v]) dangling += x[v];
    const double base = (1.0 - damping + damping * dangling) / n;
    for (std::uint32_t v = 0; v < n; ++v) {
      double sum = 0;
      for (std::uint64_t i = off[v]; i < off[v + 1]; ++i) {
        const std::uint32_t u = adj[i];
        sum += x[u] / static_cast<double>(off[u + 1] - off[u]);
      }
      next[v] = base + damping * sum;
    }
    double err = 0;
    for (std::uint32_t v = 0; v < n; ++v) err += std::abs(next[v] - x[v]);
    x.swap(next);
    if (err < tol) break;
  }
  return x;
}

}  // namespace infcom
