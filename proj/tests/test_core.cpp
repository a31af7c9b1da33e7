#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "infcom/baselines.hpp"
#include "infcom/core.hpp"

using namespace infcom;
using fixtures::labels_of;
using fixtures::summarize;
using fixtures::vid;

namespace {

std::vector<std::string> key_labels(const WeightedGraph& g, const KeyCvs& kc) {
  std::vector<std::string> out;
  for (VertexId u : kc.keys) out.push_back(g.label(u));
  return out;
}

std::vector<std::string> cvs_labels(const WeightedGraph& g, const KeyCvs& kc) {
  std::vector<std::string> out;
  for (VertexId v : kc.cvs) out.push_back(g.label(v));
  return out;
}

}  // namespace

TEST_CASE("gamma_core basics") {
  SUBCASE("path has no 2-core") {
    WeightedGraph g = fixtures::weight_labelled({{1, 2}, {2, 3}, {3, 4}}, 4);
    PrefixSubgraph sub(g);
    sub.set_prefix(4);
    std::vector<VertexId> peeled;
    gamma_core(sub, 2, &peeled);
    CHECK(sub.live_count() == 0);
    CHECK(peeled.size() == 4);
  }
  SUBCASE("cycle is its own 2-core") {
    WeightedGraph g =
        fixtures::weight_labelled({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}, 5);
    PrefixSubgraph sub(g);
    sub.set_prefix(5);
    gamma_core(sub, 2);
    CHECK(sub.live_count() == 5);
  }
  SUBCASE("pendant vertex drops, K4 stays") {
    WeightedGraph g = fixtures::weight_labelled(
        {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {1, 2}}, 5);
    PrefixSubgraph sub(g);
    sub.set_prefix(5);
    gamma_core(sub, 3);
    CHECK(sub.live_count() == 4);
    CHECK_FALSE(sub.live(vid(g, "1")));
  }
}

TEST_CASE("remove_and_cascade on K5") {
  WeightedGraph g = fixtures::k5();
  PrefixSubgraph sub(g);
  sub.set_prefix(5);
  gamma_core(sub, 3);
  REQUIRE(sub.live_count() == 5);
  std::vector<VertexId> cvs;
  remove_and_cascade(sub, vid(g, "1"), 3, cvs);
  CHECK(labels_of(g, cvs) == std::vector<std::string>{"1"});
  CHECK(sub.live_count() == 4);
  // Every survivor now has degree exactly 3; deleting "2" cascades the rest.
  remove_and_cascade(sub, vid(g, "2"), 3, cvs);
  CHECK(sub.live_count() == 0);
  CHECK(cvs.size() == 5);
  CHECK(g.label(cvs[1]) == "2");  // the deleted vertex leads its cascade
}

TEST_CASE("count_ic frozen examples") {
  SUBCASE("K5 gamma=3") {
    WeightedGraph g = fixtures::k5();
    PrefixSubgraph sub(g);
    sub.set_prefix(5);
    KeyCvs kc = count_ic(sub, 3);
    CHECK(kc.count() == 2);
    CHECK(key_labels(g, kc) == std::vector<std::string>{"1", "2"});
    CHECK(cvs_labels(g, kc) == std::vector<std::string>{"1", "2", "3", "4", "5"});
    CHECK(kc.key_pos == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("two disjoint triangles gamma=2") {
    WeightedGraph g = fixtures::two_triangles();
    PrefixSubgraph sub(g);
    sub.set_prefix(6);
    KeyCvs kc = count_ic(sub, 2);
    CHECK(kc.count() == 2);
    CHECK(key_labels(g, kc) == std::vector<std::string>{"1", "4"});
    CHECK(labels_of(g, {kc.group(0).begin(), kc.group(0).end()}) ==
          std::vector<std::string>{"1", "2", "3"});
    CHECK(labels_of(g, {kc.group(1).begin(), kc.group(1).end()}) ==
          std::vector<std::string>{"4", "5", "6"});
  }
  SUBCASE("apex over K4 gamma=3") {
    WeightedGraph g = fixtures::apex_k4();
    PrefixSubgraph sub(g);
    sub.set_prefix(5);
    KeyCvs kc = count_ic(sub, 3);
    CHECK(kc.count() == 2);
    CHECK(key_labels(g, kc) == std::vector<std::string>{"1", "2"});
    CHECK(cvs_labels(g, kc) == std::vector<std::string>{"1", "2", "3", "4", "5"});
  }
  SUBCASE("gamma above degeneracy finds nothing") {
    WeightedGraph g = fixtures::k5();
    PrefixSubgraph sub(g);
    sub.set_prefix(5);
    KeyCvs kc = count_ic(sub, 5);
    CHECK(kc.count() == 0);
    CHECK(kc.cvs.empty());
  }
}

TEST_CASE("enum_ic nests the K5 communities") {
  WeightedGraph g = fixtures::k5();
  PrefixSubgraph sub(g);
  sub.set_prefix(5);
  KeyCvs kc = count_ic(sub, 3);
  CommunityTree tree = enum_ic(g, kc, 2);
  auto cs = materialize(g, tree, kc, 2);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].rank == 1);
  CHECK(cs[0].influence == 2.0);
  CHECK(labels_of(g, cs[0].members) == std::vector<std::string>{"2", "3", "4", "5"});
  CHECK(cs[0].children.empty());
  CHECK(cs[1].rank == 2);
  CHECK(cs[1].influence == 1.0);
  CHECK(labels_of(g, cs[1].members) ==
        std::vector<std::string>{"1", "2", "3", "4", "5"});
  // the lighter community holds only its own vertex plus a child link
  CHECK(labels_of(g, cs[1].group) == std::vector<std::string>{"1"});
  CHECK(labels_of(g, cs[1].children) == std::vector<std::string>{"2"});
}

TEST_CASE("enum_ic k=1 takes only the heaviest community") {
  WeightedGraph g = fixtures::k5();
  PrefixSubgraph sub(g);
  sub.set_prefix(5);
  KeyCvs kc = count_ic(sub, 3);
  CommunityTree tree = enum_ic(g, kc, 1);
  auto cs = materialize(g, tree, kc, 1);
  REQUIRE(cs.size() == 1);
  CHECK(labels_of(g, cs[0].members) == std::vector<std::string>{"2", "3", "4", "5"});
  CHECK_FALSE(tree.contains(vid(g, "1")));
}

TEST_CASE("enum_ic rejects k = 0") {
  WeightedGraph g = fixtures::k5();
  PrefixSubgraph sub(g);
  sub.set_prefix(5);
  KeyCvs kc = count_ic(sub, 3);
  CHECK_THROWS_AS(enum_ic(g, kc, 0), std::invalid_argument);
}

TEST_CASE("peel structure invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    WeightedGraph g = fixtures::random_graph(11, 5.0, seed);
    for (std::uint32_t gamma : {2u, 3u}) {
      // Independent core computation for the reference vertex set.
      PrefixSubgraph ref(g);
      ref.set_prefix(g.vertex_count());
      gamma_core(ref, gamma);
      std::vector<VertexId> core;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (ref.live(v)) core.push_back(v);

      PrefixSubgraph sub(g);
      sub.set_prefix(g.vertex_count());
      KeyCvs kc = count_ic(sub, gamma);

      // cvs is a permutation of the core.
      std::vector<VertexId> sorted_cvs(kc.cvs);
      std::sort(sorted_cvs.begin(), sorted_cvs.end());
      CHECK(sorted_cvs == core);
      // keys are increasing in weight (decreasing id), start cvs groups.
      for (std::size_t i = 0; i + 1 < kc.keys.size(); ++i)
        CHECK(kc.keys[i] > kc.keys[i + 1]);
      for (std::size_t i = 0; i < kc.keys.size(); ++i) {
        CHECK(kc.cvs[kc.key_pos[i]] == kc.keys[i]);
        CHECK(kc.is_key[kc.keys[i]]);
      }
      if (!kc.keys.empty()) CHECK(kc.key_pos[0] == 0);
    }
  }
}

TEST_CASE("count and enum agree with the reference enumeration") {
  int graphs = 0, with_two = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::uint32_t n = 4 + static_cast<std::uint32_t>(seed % 9);
    WeightedGraph g = fixtures::random_graph(n, 0.5 * n, seed * 77 + 5);
    for (std::uint32_t gamma : {2u, 3u}) {
      auto oracle = oracle_enumerate(g, gamma);
      PrefixSubgraph sub(g);
      sub.set_prefix(g.vertex_count());
      KeyCvs kc = count_ic(sub, gamma);
      REQUIRE(kc.count() == oracle.size());
      CommunityTree tree = enum_ic(g, kc, oracle.size() + 1);
      auto cs = materialize(g, tree, kc, oracle.size() + 1);
      CHECK(summarize(g, cs) == summarize(g, oracle));
      ++graphs;
      with_two += oracle.size() >= 2 ? 1 : 0;
    }
  }
  CHECK(graphs == 200);
  CHECK(with_two > 40);  // the family genuinely exercises nesting
}

TEST_CASE("communities are pairwise nested or disjoint") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    WeightedGraph g = fixtures::random_graph(60, 7.0, seed + 31);
    PrefixSubgraph sub(g);
    sub.set_prefix(g.vertex_count());
    KeyCvs kc = count_ic(sub, 3);
    if (kc.count() == 0) continue;
    CommunityTree tree = enum_ic(g, kc, kc.count());
    auto cs = materialize(g, tree, kc, kc.count());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const auto& a = cs[i].members;
        const auto& b = cs[j].members;
        std::vector<VertexId> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        const bool disjoint = inter.empty();
        const bool nested = inter.size() == std::min(a.size(), b.size());
        CHECK((disjoint || nested));
      }
    }
  }
}
