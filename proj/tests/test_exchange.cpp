#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exlab/exchange.hpp"
#include "exlab/trees.hpp"
#include "test_util.hpp"

using namespace exlab;

namespace {

VertexSet petersen_set(std::initializer_list<std::vector<int>> subsets) {
  VertexSet out;
  for (const auto& subset : subsets) out.push_back(kneser_vertex_index(5, 2, subset));
  std::sort(out.begin(), out.end());
  return out;
}

// re-verify a reported witness from scratch: every swap must fail
void check_witness(const Graph& g, SetKind kind, const ExchangeWitness& witness) {
  CHECK(swap_candidates(g, kind, witness.set, witness.replacement).empty());
}

}  // namespace

TEST_CASE("Petersen: resolving exchange fails, determining exchange holds") {
  Graph petersen = testutil::petersen();

  ExchangeReport resolving = exchange_property(petersen, SetKind::resolving);
  CHECK(!resolving.holds);
  REQUIRE(resolving.witness.has_value());
  check_witness(petersen, SetKind::resolving, *resolving.witness);
  CHECK(!resolving.equal_cardinality);
  CHECK(resolving.size_histogram.count(3) == 1);
  CHECK(resolving.size_histogram.count(4) == 1);

  // the published witness: S = {{1,2},{1,3},{1,5}}, r = {2,4}
  VertexSet s = petersen_set({{1, 2}, {1, 3}, {1, 5}});
  int r = kneser_vertex_index(5, 2, {2, 4});
  CHECK(swap_candidates(petersen, SetKind::resolving, s, r).empty());

  ExchangeReport determining = exchange_property(petersen, SetKind::determining);
  CHECK(determining.holds);
  CHECK(!determining.witness.has_value());
  CHECK(determining.equal_cardinality);
}

TEST_CASE("K_{7:3}: the published determining witness fails to swap") {
  Graph k73 = generate({Family::kneser, {7, 3}, {}});
  VertexSet s = {kneser_vertex_index(7, 3, {1, 2, 3}),
                 kneser_vertex_index(7, 3, {3, 4, 5}),
                 kneser_vertex_index(7, 3, {1, 5, 6})};
  std::sort(s.begin(), s.end());
  int r = kneser_vertex_index(7, 3, {1, 2, 6});
  CHECK(swap_candidates(k73, SetKind::determining, s, r).empty());

  // r genuinely belongs to a minimal determining set: push S through the
  // transposition (2 5), which carries {1,5,6} to {1,2,6}
  AutGroup group = automorphism_group(k73);
  VertexSet image = {kneser_vertex_index(7, 3, {1, 5, 3}),
                     kneser_vertex_index(7, 3, {3, 4, 2}),
                     kneser_vertex_index(7, 3, {1, 2, 6})};
  std::sort(image.begin(), image.end());
  CHECK(is_minimal_determining(group, image));
}

TEST_CASE("swap candidates") {
  Graph c6 = generate({Family::cycle, {6}, {}});
  CHECK(swap_candidates(c6, SetKind::determining, {0, 1}, 2) == std::vector<int>{0, 1});
  // r already in S swaps for itself
  CHECK(swap_candidates(c6, SetKind::determining, {0, 1}, 1) == std::vector<int>{1});

  Graph w10 = testutil::wheel(10);
  VertexSet published_set = {0, 3, 5, 8};  // {1,4,6,9} in 1-based labels
  CHECK(swap_candidates(w10, SetKind::resolving, published_set, 1).empty());

  CHECK_THROWS_AS(swap_candidates(c6, SetKind::determining, {0}, 2), ParameterError);
  CHECK_THROWS_AS(swap_candidates(c6, SetKind::determining, {0, 3}, 2), ParameterError);
}

TEST_CASE("exchange on trees: both kinds hold off paths, resolving breaks on paths") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    Graph tree = generate({Family::random_tree, {9}, seed});
    ExchangeReport det = exchange_property(tree, SetKind::determining);
    CHECK(det.holds);
    if (!is_path_graph(tree)) {
      ExchangeReport res = exchange_property(tree, SetKind::resolving);
      CHECK(res.holds);
    }
  }

  // the path anomaly: P_5 has minimal resolving sets {0} and {1,3}
  Graph p5 = generate({Family::path, {5}, {}});
  ExchangeReport res = exchange_property(p5, SetKind::resolving);
  CHECK(!res.holds);
  CHECK(!res.equal_cardinality);
  ExchangeReport det = exchange_property(p5, SetKind::determining);
  CHECK(det.holds);
}

TEST_CASE("holds implies equal cardinality across a corpus") {
  std::vector<Graph> graphs = {
      generate({Family::cycle, {6}, {}}),
      testutil::wheel(6),
      testutil::two_triangles(),
      generate({Family::random_tree, {8}, 21}),
      testutil::petersen(),
  };
  for (const Graph& g : graphs) {
    for (SetKind kind : {SetKind::determining, SetKind::resolving}) {
      ExchangeReport report = exchange_property(g, kind);
      if (report.holds) {
        CHECK(report.equal_cardinality);
        CHECK(!report.witness.has_value());
      } else {
        REQUIRE(report.witness.has_value());
        check_witness(g, kind, *report.witness);
      }
    }
  }
}

TEST_CASE("verdict and histogram are invariant under relabeling") {
  Graph petersen = testutil::petersen();
  // rotate labels by a fixed permutation
  int n = petersen.vertex_count();
  Graph relabeled(n);
  for (auto [u, v] : petersen.edges()) {
    relabeled.add_edge((u + 3) % n, (v + 3) % n);
  }
  for (SetKind kind : {SetKind::determining, SetKind::resolving}) {
    ExchangeReport a = exchange_property(petersen, kind);
    ExchangeReport b = exchange_property(relabeled, kind);
    CHECK(a.holds == b.holds);
    CHECK(a.size_histogram == b.size_histogram);
  }
}

TEST_CASE("budget exhaustion raises a budget error") {
  SearchBudget tiny(10);
  CHECK_THROWS_AS(exchange_property(testutil::petersen(), SetKind::resolving, tiny),
                  BudgetError);
}
