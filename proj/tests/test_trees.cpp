#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exlab/exchange.hpp"
#include "exlab/trees.hpp"
#include "test_util.hpp"

using namespace exlab;

// Figure-layout fixture: path a1..a8 = vertices 0..7, pendant leaf 8 on a3=2,
// pendant leaf 9 on a6=5.  Its only symmetry is the end-for-end mirror.

TEST_CASE("tree recognition and centers") {
  CHECK(is_tree(generate({Family::path, {5}, {}})));
  CHECK(!is_tree(generate({Family::cycle, {5}, {}})));
  CHECK(is_path_graph(generate({Family::path, {7}, {}})));
  CHECK(!is_path_graph(testutil::spider({2, 2, 2})));

  CHECK(tree_center(generate({Family::path, {5}, {}})) == std::vector<int>{2});
  CHECK(tree_center(generate({Family::path, {4}, {}})) == std::vector<int>{1, 2});
  CHECK(tree_center(testutil::figure_one_tree()) == std::vector<int>{3, 4});
}

TEST_CASE("normalize_center subdivides exactly the bicentral trees") {
  Graph p4 = generate({Family::path, {4}, {}});
  Graph normalized = normalize_center(p4);
  CHECK(normalized.vertex_count() == 5);
  CHECK(is_path_graph(normalized));
  CHECK(tree_center(normalized).size() == 1);

  Graph p5 = generate({Family::path, {5}, {}});
  CHECK(normalize_center(p5) == p5);

  Graph fig = normalize_center(testutil::figure_one_tree());
  CHECK(fig.vertex_count() == 11);
  CHECK(tree_center(fig) == std::vector<int>{10});

  CHECK_THROWS_AS(normalize_center(generate({Family::cycle, {4}, {}})), DomainError);
}

TEST_CASE("normalization preserves the minimal determining census") {
  for (std::uint64_t seed : {4ull, 9ull, 15ull}) {
    Graph tree = generate({Family::random_tree, {8}, seed});
    Graph normalized = normalize_center(tree);
    MinimalSetCensus before = minimal_determining_sets(tree, tree.vertex_count());
    MinimalSetCensus after =
        minimal_determining_sets(normalized, normalized.vertex_count());
    CHECK(before.sets == after.sets);
  }
}

TEST_CASE("exterior major vertices") {
  Graph spider = testutil::spider({2, 2, 2});
  auto emvs = exterior_major_vertices(spider);
  REQUIRE(emvs.size() == 1);
  CHECK(emvs[0].vertex == 0);
  CHECK(emvs[0].branch_paths.size() == 3);

  CHECK(exterior_major_vertices(generate({Family::path, {6}, {}})).empty());

  auto fig_emvs = exterior_major_vertices(testutil::figure_one_tree());
  REQUIRE(fig_emvs.size() == 2);
  CHECK(fig_emvs[0].vertex == 2);
  CHECK(fig_emvs[0].branch_paths.size() == 2);
  CHECK(fig_emvs[1].vertex == 5);
  CHECK(fig_emvs[1].branch_paths.size() == 2);

  CHECK_THROWS_AS(exterior_major_vertices(generate({Family::cycle, {5}, {}})),
                  DomainError);
}

TEST_CASE("branch isomorphism classes") {
  Graph p5 = generate({Family::path, {5}, {}});
  BranchDecomposition center = branch_iso_classes(p5, 2);
  CHECK(center.branches.size() == 2);
  CHECK(center.iso_classes.size() == 1);

  BranchDecomposition uneven = branch_iso_classes(testutil::spider({2, 2, 3}), 0);
  CHECK(uneven.branches.size() == 3);
  CHECK(uneven.iso_classes.size() == 2);

  BranchDecomposition claw = branch_iso_classes(generate({Family::star, {3}, {}}), 0);
  CHECK(claw.branches.size() == 3);
  CHECK(claw.iso_classes.size() == 1);
}

TEST_CASE("Slater checker on hand fixtures") {
  Graph spider = testutil::spider({2, 2, 2});  // leaves 2, 4, 6
  CHECK(is_minimal_resolving_tree(spider, {2, 4}));
  CHECK(!is_minimal_resolving_tree(spider, {2, 4, 6}));
  CHECK(is_minimal_resolving_tree(spider, {1, 4}));  // inner leg vertex also works
  CHECK(!is_minimal_resolving_tree(spider, {1, 2}));  // two on one branch path

  Graph star = generate({Family::star, {4}, {}});
  CHECK(is_minimal_resolving_tree(star, {1, 2, 3}));
  CHECK(!is_minimal_resolving_tree(star, {1, 2}));

  CHECK_THROWS_AS(is_minimal_resolving_tree(generate({Family::path, {5}, {}}), {0}),
                  DomainError);
}

TEST_CASE("Slater checker matches the brute-force oracle") {
  std::vector<Graph> trees = {
      testutil::spider({2, 2, 2}),
      testutil::spider({1, 2, 3}),
      testutil::figure_one_tree(),
      generate({Family::star, {4}, {}}),
  };
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    trees.push_back(generate({Family::random_tree, {8}, seed}));
  }
  for (const Graph& tree : trees) {
    if (is_path_graph(tree)) continue;
    DistanceMatrix dist = all_pairs_distances(tree);
    for (const VertexSet& s : testutil::all_subsets(tree.vertex_count())) {
      CHECK(is_minimal_resolving_tree(tree, s) == is_minimal_resolving(dist, s));
    }
  }
}

TEST_CASE("constructed witnesses pass the minimality oracle") {
  std::vector<Graph> trees = {
      testutil::spider({2, 2, 2}),
      generate({Family::star, {4}, {}}),
      testutil::figure_one_tree(),
  };
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    trees.push_back(generate({Family::random_tree, {10}, seed}));
  }
  for (const Graph& tree : trees) {
    if (is_path_graph(tree)) continue;
    VertexSet witness = construct_minimal_resolving_tree(tree);
    CHECK(is_minimal_resolving(tree, witness));
  }
  CHECK(construct_minimal_resolving_tree(testutil::spider({2, 2, 2})).size() == 2);
  CHECK(construct_minimal_resolving_tree(generate({Family::star, {4}, {}})).size() == 3);

  // caterpillar with two exterior major vertices, two branch paths each
  CHECK(construct_minimal_resolving_tree(testutil::figure_one_tree()).size() == 2);
}

TEST_CASE("determining characterization on hand fixtures") {
  Graph fig = testutil::figure_one_tree();
  CHECK(!is_determining_tree(fig, {}));
  CHECK(is_determining_tree(fig, {0}));

  Graph p5 = generate({Family::path, {5}, {}});
  CHECK(!is_determining_tree(p5, {2}));
  CHECK(is_determining_tree(p5, {0}));
}

TEST_CASE("determining characterization matches the stabilizer oracle") {
  std::vector<Graph> trees = {testutil::figure_one_tree(), testutil::spider({2, 2, 2})};
  for (std::uint64_t seed = 40; seed < 55; ++seed) {
    trees.push_back(generate({Family::random_tree, {8}, seed}));
  }
  for (const Graph& tree : trees) {
    AutGroup group = automorphism_group(tree);
    for (const VertexSet& s : testutil::all_subsets(tree.vertex_count())) {
      CHECK(is_determining_tree(tree, s) == is_determining(group, s));
    }
  }
}

TEST_CASE("constructive exchange swaps") {
  Graph spider = testutil::spider({2, 2, 2});
  int swap = tree_exchange_swap(spider, SetKind::resolving, {2, 4}, 6);
  CHECK((swap == 2 || swap == 4));
  VertexSet swapped = {6};
  for (int v : {2, 4}) {
    if (v != swap) swapped.push_back(v);
  }
  std::sort(swapped.begin(), swapped.end());
  CHECK(is_minimal_resolving(spider, swapped));

  CHECK(tree_exchange_swap(spider, SetKind::resolving, {2, 4}, 4) == 4);

  Graph fig = testutil::figure_one_tree();
  CHECK(tree_exchange_swap(fig, SetKind::determining, {0}, 7) == 0);
}

TEST_CASE("swap output always passes the kind's minimality oracle") {
  for (std::uint64_t seed = 60; seed < 75; ++seed) {
    Graph tree = generate({Family::random_tree, {9}, seed});
    if (is_path_graph(tree)) continue;
    AutGroup group = automorphism_group(tree);
    if (group.trivial()) continue;  // no determining exchange to do

    MinimalSetCensus det = minimal_determining_sets(tree, tree.vertex_count());
    const VertexSet& s = det.sets.front();
    for (const VertexSet& other : det.sets) {
      for (int r : other) {
        int swap = tree_exchange_swap(tree, SetKind::determining, s, r);
        VertexSet result = {r};
        for (int v : s) {
          if (v != swap) result.push_back(v);
        }
        result = make_vertex_set(result, tree.vertex_count());
        CHECK(is_minimal_determining(normalize_center(tree), result));
      }
    }

    MinimalSetCensus res = minimal_resolving_sets(tree, tree.vertex_count());
    const VertexSet& rs = res.sets.front();
    for (int r : res.sets.back()) {
      int swap = tree_exchange_swap(tree, SetKind::resolving, rs, r);
      VertexSet result = {r};
      for (int v : rs) {
        if (v != swap) result.push_back(v);
      }
      result = make_vertex_set(result, tree.vertex_count());
      CHECK(is_minimal_resolving(tree, result));
    }
  }
}

TEST_CASE("domain errors") {
  Graph c5 = generate({Family::cycle, {5}, {}});
  CHECK_THROWS_AS(is_determining_tree(c5, {0}), DomainError);
  CHECK_THROWS_AS(tree_exchange_swap(c5, SetKind::determining, {0}, 1), DomainError);
  Graph p5 = generate({Family::path, {5}, {}});
  CHECK_THROWS_AS(tree_exchange_swap(p5, SetKind::resolving, {0}, 4), DomainError);
  CHECK_THROWS_AS(construct_minimal_resolving_tree(p5), DomainError);
}
