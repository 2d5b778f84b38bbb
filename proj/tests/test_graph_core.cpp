#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exlab/graph.hpp"
#include "test_util.hpp"

using namespace exlab;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

}  // namespace

TEST_CASE("family generators produce the documented shapes") {
  Graph w4 = generate({Family::wheel, {4}, {}});
  CHECK(w4.vertex_count() == 5);
  CHECK(w4.edge_count() == 8);

  Graph petersen = testutil::petersen();
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);

  Graph q3 = generate({Family::hypercube, {3}, {}});
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);

  Graph star = generate({Family::star, {4}, {}});
  CHECK(star.vertex_count() == 5);
  CHECK(star.degree(0) == 4);
}

TEST_CASE("kneser graphs are C(n-k,k)-regular and reject bad parameters") {
  for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {7, 2}, {7, 3}}) {
    Graph g = generate({Family::kneser, {n, k}, {}});
    CHECK(g.vertex_count() == binomial(n, k));
    long long expected_degree = binomial(n - k, k);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == expected_degree);
  }
  CHECK_THROWS_AS(generate({Family::kneser, {4, 2}, {}}), ParameterError);
  CHECK_THROWS_AS(generate({Family::kneser, {5, 3}, {}}), ParameterError);
  CHECK_THROWS_AS(generate({Family::wheel, {2}, {}}), ParameterError);
  CHECK_THROWS_AS(generate({Family::cycle, {2}, {}}), ParameterError);
  CHECK_THROWS_AS(generate({Family::random_tree, {6}, {}}), ParameterError);
}

TEST_CASE("kneser vertex order is lexicographic on 1-based subsets") {
  auto subsets = kneser_vertex_subsets(5, 2);
  REQUIRE(subsets.size() == 10);
  CHECK(subsets[0] == std::vector<int>{1, 2});
  CHECK(subsets[3] == std::vector<int>{1, 5});
  CHECK(subsets[9] == std::vector<int>{4, 5});
  CHECK(kneser_vertex_index(5, 2, {2, 4}) == 5);
  CHECK_THROWS_AS(kneser_vertex_index(5, 2, {1, 1}), ParameterError);
}

TEST_CASE("generate is deterministic given spec and seed") {
  FamilySpec spec{Family::random_tree, {9}, 42};
  CHECK(generate(spec) == generate(spec));
  FamilySpec other{Family::random_tree, {9}, 43};
  CHECK(generate(spec) != generate(other));

  FamilySpec op{Family::random_outerplanar, {9}, 7};
  CHECK(generate(op) == generate(op));
}

TEST_CASE("graph6 fixed encodings") {
  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK(write_graph6(k2) == "A_");

  Graph lone(1);
  CHECK(write_graph6(lone) == "@");

  CHECK(write_graph6(Graph(0)) == "?");
  CHECK(parse_graph6("?") == Graph(0));
  CHECK(write_graph6(generate({Family::cycle, {5}, {}})) == "Dhc");

  CHECK(parse_graph6("A_") == k2);
  CHECK(parse_graph6(write_graph6(testutil::petersen())) == testutil::petersen());
}

TEST_CASE("graph6 roundtrip on seeded random graphs") {
  SeededRng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rng.below(12);
    Graph g = testutil::random_graph(n, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 malformed inputs are rejected") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("D"), FormatError);      // truncated body
  CHECK_THROWS_AS(parse_graph6("A__"), FormatError);    // body too long
  CHECK_THROWS_AS(parse_graph6("~??"), FormatError);    // long form
  CHECK_THROWS_AS(parse_graph6("B\x01"), FormatError);  // body byte out of range
  Graph big(63);
  CHECK_THROWS_AS(write_graph6(big), BudgetError);
}

TEST_CASE("edge-list JSON parsing") {
  Graph g = parse_edge_list_json(R"({"n": 3, "edges": [[0,1],[1,2]]})");
  CHECK(g.vertex_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  CHECK_THROWS_AS(parse_edge_list_json("{}"), FormatError);
  CHECK_THROWS_AS(parse_edge_list_json(R"({"n": 2, "edges": [[0,2]]})"), FormatError);
}

TEST_CASE("all_pairs_distances basics") {
  Graph c5 = generate({Family::cycle, {5}, {}});
  DistanceMatrix dist = all_pairs_distances(c5);
  CHECK(dist[0][2] == 2);
  CHECK(dist[0][3] == 2);

  Graph w8 = testutil::wheel(8);
  DistanceMatrix wheel_dist = all_pairs_distances(w8);
  CHECK(wheel_dist[0][3] == 2);  // through the hub

  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  DistanceMatrix split_dist = all_pairs_distances(split);
  CHECK(split_dist[0][2] == kUnreachable);
}

TEST_CASE("distance matrix satisfies metric axioms on a seeded corpus") {
  SeededRng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testutil::random_graph(2 + rng.below(9), rng);
    DistanceMatrix dist = all_pairs_distances(g);
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      CHECK(dist[u][u] == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(dist[u][v] == dist[v][u]);
        for (int w = 0; w < n; ++w) {
          if (dist[u][v] == kUnreachable || dist[v][w] == kUnreachable) continue;
          if (dist[u][w] == kUnreachable) continue;
          CHECK(dist[u][w] <= dist[u][v] + dist[v][w]);
        }
      }
    }
  }
}

TEST_CASE("edge surgery") {
  Graph w8 = testutil::wheel(8);
  Graph pruned = delete_edge(w8, 0, 7);
  CHECK(pruned.vertex_count() == 9);
  CHECK(pruned.edge_count() == 15);

  Graph restored = pruned;
  restored.add_edge(0, 7);
  CHECK(restored == w8);
  CHECK_THROWS_AS(delete_edge(pruned, 0, 7), ParameterError);

  Graph p4 = generate({Family::path, {4}, {}});
  Graph p5ish = subdivide_edge(p4, 1, 2);
  CHECK(p5ish.vertex_count() == 5);
  CHECK(p5ish.edge_count() == 4);
  for (int v = 0; v < 5; ++v) CHECK(p5ish.degree(v) <= 2);
  CHECK(is_connected(p5ish));

  Graph k2(2);
  k2.add_edge(0, 1);
  Graph p3 = subdivide_edge(k2, 0, 1);
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.degree(2) == 2);
  CHECK_THROWS_AS(subdivide_edge(p4, 0, 3), ParameterError);
}

TEST_CASE("induced subgraph relabels by sorted position") {
  Graph g = testutil::two_triangles();
  Graph triangle = induced_subgraph(g, {0, 3, 4});
  CHECK(triangle.vertex_count() == 3);
  CHECK(triangle.edge_count() == 3);
}
