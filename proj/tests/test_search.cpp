#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "infcom/core.hpp"
#include "infcom/search.hpp"

using namespace infcom;
using fixtures::labels_of;
using fixtures::summarize;
using fixtures::vid;

namespace {

// Disjoint triangles {1,2,3}, {4,5,6}, ... with weights equal to labels, so
// community count grows one triangle at a time as the window descends.
WeightedGraph triangle_row(std::uint32_t triangles) {
  std::vector<std::pair<int, int>> edges;
  for (std::uint32_t t = 0; t < triangles; ++t) {
    const int base = static_cast<int>(3 * t);
    edges.push_back({base + 1, base + 2});
    edges.push_back({base + 1, base + 3});
    edges.push_back({base + 2, base + 3});
  }
  return fixtures::weight_labelled(edges, 3 * triangles);
}

fixtures::Summary run_progressive(const WeightedGraph& g, std::uint32_t gamma,
                                  double delta, std::size_t limit,
                                  SearchTrace* trace_out = nullptr) {
  std::vector<Community> got;
  SearchTrace trace = local_search_progressive(
      g, gamma, delta, [&](Community&& c) {
        got.push_back(std::move(c));
        return got.size() < limit;
      });
  if (trace_out) *trace_out = trace;
  return summarize(g, got);
}

}  // namespace

TEST_CASE("initial_tau picks the (k+gamma)-th heaviest weight") {
  WeightedGraph g22 = fixtures::weight_labelled({{1, 2}}, 22);
  CHECK(initial_tau(g22, 3, 4) == 16.0);
  WeightedGraph g5 = fixtures::k5();
  CHECK(initial_tau(g5, 3, 1) == 2.0);
  CHECK(initial_tau(g5, 3, 40) == 1.0);  // clamps at the full graph
}

TEST_CASE("local_search on K5") {
  WeightedGraph g = fixtures::k5();
  SUBCASE("k=1 stops in the first window") {
    TopKResult r = local_search(g, {.gamma = 3, .k = 1, .delta = 2.0});
    REQUIRE(r.communities.size() == 1);
    CHECK(r.complete);
    CHECK(r.total_in_window == 1);
    CHECK(r.communities[0].influence == 2.0);
    CHECK(labels_of(g, r.communities[0].members) ==
          std::vector<std::string>{"2", "3", "4", "5"});
    REQUIRE(r.trace.iterations.size() == 1);
    CHECK(r.trace.iterations[0].prefix_len == 4);
    CHECK(r.trace.iterations[0].tau == 2.0);
    CHECK(r.trace.iterations[0].size == 10);  // 4 vertices + 6 edges
  }
  SUBCASE("asking for more than exist reports incompleteness") {
    TopKResult r = local_search(g, {.gamma = 3, .k = 3, .delta = 2.0});
    CHECK(r.communities.size() == 2);
    CHECK_FALSE(r.complete);
    CHECK(r.total_in_window == 2);
  }
}

TEST_CASE("local_search grows the window until k communities appear") {
  WeightedGraph g = triangle_row(4);  // labels 1..12
  TopKResult r = local_search(g, {.gamma = 2, .k = 3, .delta = 2.0});
  REQUIRE(r.trace.iterations.size() == 2);
  CHECK(r.trace.iterations[0].prefix_len == 5);
  CHECK(r.trace.iterations[0].count == 1);
  // doubling size 9 asks for 18, reached at 9 vertices + 9 induced edges
  CHECK(r.trace.iterations[1].prefix_len == 9);
  CHECK(r.trace.iterations[1].size == 18);
  CHECK(r.trace.iterations[1].count == 3);
  CHECK(r.complete);
  fixtures::Summary want = {{10.0, {"10", "11", "12"}},
                            {7.0, {"7", "8", "9"}},
                            {4.0, {"4", "5", "6"}}};
  CHECK(summarize(g, r.communities) == want);
  CHECK(r.trace.accessed_size() == 18);
}

TEST_CASE("local_search validates its parameters") {
  WeightedGraph g = fixtures::k5();
  CHECK_THROWS_AS(local_search(g, {.gamma = 0, .k = 1, .delta = 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_search(g, {.gamma = 3, .k = 1, .delta = 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_search(g, {.gamma = 3, .k = 0, .delta = 2.0}),
                  std::invalid_argument);
}

TEST_CASE("construct_cvs halts at the previous prefix boundary") {
  WeightedGraph g = fixtures::apex_k4();
  PrefixSubgraph sub(g);

  sub.set_prefix(4);
  KeyCvs first = construct_cvs(sub, 3, 0);
  REQUIRE(first.keys.size() == 1);
  CHECK(g.label(first.keys[0]) == "2");
  CHECK(first.cvs.size() == 4);

  sub.set_prefix(5);
  KeyCvs second = construct_cvs(sub, 3, 4);
  REQUIRE(second.keys.size() == 1);
  CHECK(g.label(second.keys[0]) == "1");
  // stops before re-reporting the key already seen in the smaller window
  CHECK(labels_of(g, second.cvs) == std::vector<std::string>{"1"});

  // newest fragment first reproduces the one-shot peel of the final window
  std::vector<VertexId> stitched(second.cvs);
  stitched.insert(stitched.end(), first.cvs.begin(), first.cvs.end());
  PrefixSubgraph fresh(g);
  fresh.set_prefix(5);
  KeyCvs whole = count_ic(fresh, 3);
  CHECK(stitched == whole.cvs);
}

TEST_CASE("progressive emission matches batch enumeration") {
  WeightedGraph g = fixtures::apex_k4();
  SearchTrace trace;
  fixtures::Summary got = run_progressive(g, 3, 2.0, SIZE_MAX, &trace);
  fixtures::Summary want = {{2.0, {"2", "3", "4", "5"}},
                            {1.0, {"1", "2", "3", "4", "5"}}};
  CHECK(got == want);
  CHECK(trace.iterations.size() == 2);
}

TEST_CASE("progressive equals batch on random graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    WeightedGraph g = fixtures::random_graph(40 + seed, 6.0, seed * 13 + 1);
    for (std::uint32_t gamma : {2u, 4u}) {
      PrefixSubgraph sub(g);
      sub.set_prefix(g.vertex_count());
      KeyCvs kc = count_ic(sub, gamma);
      fixtures::Summary want;
      if (kc.count() > 0) {
        CommunityTree tree = enum_ic(g, kc, kc.count());
        want = summarize(g, materialize(g, tree, kc, kc.count()));
      }
      fixtures::Summary got = run_progressive(g, gamma, 2.0, SIZE_MAX);
      CHECK(got == want);

      // influence strictly decreases along the stream
      for (std::size_t i = 1; i < got.size(); ++i)
        CHECK(got[i].first < got[i - 1].first);
    }
  }
}

TEST_CASE("progressive prefix agrees with local_search top-k") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    WeightedGraph g = fixtures::random_graph(70, 8.0, seed * 3 + 7);
    for (std::uint32_t k : {1u, 2u, 5u}) {
      fixtures::Summary streamed = run_progressive(g, 3, 2.0, k);
      TopKResult batch = local_search(g, {.gamma = 3, .k = k, .delta = 2.0});
      fixtures::Summary want = summarize(g, batch.communities);
      if (want.size() > k) want.resize(k);
      CHECK(streamed == want);
    }
  }
}

TEST_CASE("progressive sink can stop the stream early") {
  WeightedGraph g = triangle_row(6);
  std::size_t calls = 0;
  local_search_progressive(g, 2, 2.0, [&](Community&&) {
    ++calls;
    return calls < 2;
  });
  CHECK(calls == 2);
}
