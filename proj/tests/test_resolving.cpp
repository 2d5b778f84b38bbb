#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exlab/resolving.hpp"
#include "test_util.hpp"

using namespace exlab;

namespace {

VertexSet petersen_set(std::initializer_list<std::vector<int>> subsets) {
  VertexSet out;
  for (const auto& subset : subsets) out.push_back(kneser_vertex_index(5, 2, subset));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("resolving predicates on the Petersen fixtures") {
  Graph petersen = testutil::petersen();
  DistanceMatrix dist = connected_distances(petersen);

  VertexSet s = petersen_set({{1, 2}, {1, 3}, {1, 5}});
  CHECK(is_resolving(dist, s));
  CHECK(is_minimal_resolving(dist, s));

  VertexSet everything;
  for (int v = 0; v < 10; ++v) everything.push_back(v);
  CHECK(is_resolving(dist, everything));

  // swapping {2,4} in for any member breaks the set
  int r = kneser_vertex_index(5, 2, {2, 4});
  for (int skip : s) {
    VertexSet swapped;
    for (int v : s) {
      if (v != skip) swapped.push_back(v);
    }
    swapped.push_back(r);
    std::sort(swapped.begin(), swapped.end());
    CHECK(!is_resolving(dist, swapped));
  }

  CHECK(is_minimal_resolving(dist, petersen_set({{1, 2}, {1, 3}, {2, 4}, {3, 5}})));
}

TEST_CASE("path and cycle sanity cases") {
  Graph p5 = generate({Family::path, {5}, {}});
  DistanceMatrix dist = connected_distances(p5);
  CHECK(is_minimal_resolving(dist, {0}));

  // brute force over singletons: exactly the two endpoints resolve P_5
  int resolving_singletons = 0;
  for (int v = 0; v < 5; ++v) {
    if (is_resolving(dist, {v})) ++resolving_singletons;
  }
  CHECK(resolving_singletons == 2);

  Graph c5 = generate({Family::cycle, {5}, {}});
  VertexSet all_c5 = {0, 1, 2, 3, 4};
  CHECK(is_resolving(c5, all_c5));
  CHECK(!is_minimal_resolving(c5, all_c5));
}

TEST_CASE("metric dimension of the named families") {
  CHECK(metric_dimension(testutil::wheel(10)) == 4);
  for (int n = 2; n <= 10; ++n) {
    CHECK(metric_dimension(generate({Family::path, {n}, {}})) == 1);
  }
  for (int n = 3; n <= 8; ++n) {
    CHECK(metric_dimension(generate({Family::complete, {n}, {}})) == n - 1);
  }
  CHECK(metric_dimension(testutil::petersen()) == 3);
}

TEST_CASE("minimal resolving censuses") {
  MinimalSetCensus petersen_census = minimal_resolving_sets(testutil::petersen(), 4);
  CHECK(petersen_census.size_histogram.count(3) == 1);
  CHECK(petersen_census.size_histogram.count(4) == 1);

  MinimalSetCensus w8_census = minimal_resolving_sets(testutil::wheel(8), 4);
  VertexSet published_set = {0, 4, 6};  // {1,5,7} in 1-based labels
  CHECK(std::find(w8_census.sets.begin(), w8_census.sets.end(), published_set) !=
        w8_census.sets.end());

  MinimalSetCensus p5_census = minimal_resolving_sets(generate({Family::path, {5}, {}}), 2);
  CHECK(std::find(p5_census.sets.begin(), p5_census.sets.end(), VertexSet{0}) !=
        p5_census.sets.end());
  CHECK(std::find(p5_census.sets.begin(), p5_census.sets.end(), VertexSet{1, 3}) !=
        p5_census.sets.end());
}

TEST_CASE("census agrees with the naive subset oracle") {
  for (const Graph& g : {generate({Family::cycle, {6}, {}}), testutil::wheel(5),
                         testutil::spider({2, 2, 2})}) {
    DistanceMatrix dist = connected_distances(g);
    auto expected = testutil::naive_minimal_sets(
        g.vertex_count(), [&dist](const VertexSet& s) { return is_resolving(dist, s); });
    MinimalSetCensus census = minimal_resolving_sets(g, g.vertex_count());
    CHECK(census.sets == expected);
    CHECK(metric_dimension(g) == static_cast<int>(census.sets.front().size()));
  }
}

TEST_CASE("disconnected graphs are rejected") {
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(is_resolving(split, {0}), DomainError);
  CHECK_THROWS_AS(metric_dimension(split), DomainError);
  CHECK_THROWS_AS(minimal_resolving_sets(split, 2), DomainError);
}

TEST_CASE("distance vectors match the distance matrix") {
  Graph g = testutil::wheel(7);
  DistanceMatrix dist = all_pairs_distances(g);
  VertexSet s = {1, 4, 6};
  auto vectors = distance_vectors(dist, s);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(vectors[v][i] == dist[s[i]][v]);
    }
  }
}

TEST_CASE("resolving implies determining on sampled sets") {
  SeededRng rng(31);
  for (const Graph& g : {testutil::petersen(), testutil::wheel(8),
                         generate({Family::random_tree, {9}, 77})}) {
    AutGroup group = automorphism_group(g);
    DistanceMatrix dist = connected_distances(g);
    for (int trial = 0; trial < 60; ++trial) {
      VertexSet s;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (rng.below(2) == 1) s.push_back(v);
      }
      if (is_resolving(dist, s)) CHECK(is_determining(group, s));
    }
  }
}
