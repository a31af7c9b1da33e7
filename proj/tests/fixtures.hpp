#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "infcom/baselines.hpp"
#include "infcom/core.hpp"
#include "infcom/generate.hpp"
#include "infcom/graph.hpp"

namespace fixtures {

using infcom::Community;
using infcom::VertexId;
using infcom::WeightedGraph;

// Graph whose vertices are labelled by their weight: "1" weighs 1, etc.
inline WeightedGraph weight_labelled(const std::vector<std::pair<int, int>>& edges,
                                     int n) {
  std::vector<std::pair<std::string, std::string>> e;
  for (auto [a, b] : edges) e.emplace_back(std::to_string(a), std::to_string(b));
  std::vector<std::pair<std::string, double>> w;
  for (int v = 1; v <= n; ++v) w.emplace_back(std::to_string(v), v);
  return infcom::ingest(e, w);
}

inline WeightedGraph weight_labelled(std::initializer_list<std::pair<int, int>> edges,
                                     int n) {
  return weight_labelled(std::vector<std::pair<int, int>>(edges), n);
}

inline WeightedGraph k5() {
  return weight_labelled({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                          {3, 4}, {3, 5}, {4, 5}},
                         5);
}

inline WeightedGraph two_triangles() {
  return weight_labelled({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}, 6);
}

// K4 on {2,3,4,5} plus vertex 1 adjacent to {2,3,4}.
inline WeightedGraph apex_k4() {
  return weight_labelled(
      {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {1, 2}, {1, 3}, {1, 4}}, 5);
}

inline VertexId vid(const WeightedGraph& g, const std::string& label) {
  return *g.id_of(label);
}

inline std::vector<std::string> labels_of(const WeightedGraph& g,
                                          const std::vector<VertexId>& vs) {
  std::set<std::string> s;
  for (VertexId v : vs) s.insert(g.label(v));
  return {s.begin(), s.end()};
}

// (influence, sorted member labels) pairs for whole-result comparison.
using Summary = std::vector<std::pair<double, std::vector<std::string>>>;

inline Summary summarize(const WeightedGraph& g, const std::vector<Community>& cs) {
  Summary s;
  for (const Community& c : cs) s.emplace_back(c.influence, labels_of(g, c.members));
  return s;
}

inline WeightedGraph random_graph(std::uint32_t n, double avg_deg, std::uint64_t seed,
                                  bool powerlaw = false) {
  infcom::GeneratedGraph gg =
      powerlaw ? infcom::gen_powerlaw(
                     n, std::max<std::uint32_t>(1, static_cast<std::uint32_t>(avg_deg / 2)),
                     seed)
               : infcom::gen_erdos(n, std::min(1.0, avg_deg / std::max(1u, n - 1)), seed);
  return infcom::to_weighted(gg, infcom::random_distinct_weights(n, seed ^ 0x9e3779b9u));
}

}  // namespace fixtures
