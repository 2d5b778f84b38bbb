#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exlab/exchange.hpp"
#include "exlab/wheels.hpp"
#include "test_util.hpp"

using namespace exlab;

namespace {

// 1-based labels as in the source criteria
VertexSet rim(std::initializer_list<int> labels) {
  VertexSet out;
  for (int v : labels) out.push_back(v - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> gap_sizes(const GapStructure& gaps) {
  std::vector<int> out;
  for (const auto& run : gaps.gaps) out.push_back(static_cast<int>(run.size()));
  return out;
}

}  // namespace

TEST_CASE("rim gaps") {
  GapStructure gaps = rim_gaps(10, rim({1, 4, 6, 9}));
  CHECK(gaps.landmarks == rim({1, 4, 6, 9}));
  CHECK(gaps.gaps == std::vector<std::vector<int>>{
                         {1, 2}, {4}, {6, 7}, {9}});  // {2,3},{5},{7,8},{10} 1-based

  GapStructure all = rim_gaps(5, rim({1, 2, 3, 4, 5}));
  CHECK(gap_sizes(all) == std::vector<int>{0, 0, 0, 0, 0});

  GapStructure w8 = rim_gaps(8, rim({1, 5, 7}));
  CHECK(gap_sizes(w8) == std::vector<int>{3, 1, 1});

  GapStructure lonely = rim_gaps(9, rim({4}));
  CHECK(gap_sizes(lonely) == std::vector<int>{8});

  CHECK_THROWS_AS(rim_gaps(8, {8}), ParameterError);  // the hub
  CHECK_THROWS_AS(rim_gaps(8, {}), ParameterError);
  CHECK_THROWS_AS(rim_gaps(2, {0}), DomainError);
}

TEST_CASE("gap criteria fixtures") {
  CHECK(is_resolving_wheel(8, rim({1, 5, 7})));
  CHECK(!is_resolving_wheel(10, rim({2, 4, 6, 9})));
  CHECK(is_resolving_wheel(12, rim({1, 5, 7, 10, 12})));
  CHECK(!is_resolving_wheel(9, {}));
  CHECK_THROWS_AS(is_resolving_wheel(6, {0}), DomainError);
}

TEST_CASE("gap criteria agree with the resolving oracle on every rim subset") {
  for (int n = 7; n <= 10; ++n) {
    Graph wheel = testutil::wheel(n);
    DistanceMatrix dist = all_pairs_distances(wheel);
    for (int mask = 0; mask < (1 << n); ++mask) {
      VertexSet s;
      for (int v = 0; v < n; ++v) {
        if (mask & (1 << v)) s.push_back(v);
      }
      CHECK(is_resolving_wheel(n, s) == is_resolving(dist, s));
    }
  }
}

TEST_CASE("canonical resolving sets match the published families") {
  CHECK(canonical_resolving_set(10) == rim({1, 4, 6, 9}));
  // the printed n = 5k+1 family {1,4,8,10} is not resolving (vertices 3 and
  // 5 get identical vectors); the corrected tail gives {1,4,6,10}
  CHECK(canonical_resolving_set(11) == rim({1, 4, 6, 10}));
  CHECK(canonical_resolving_set(9) == rim({1, 4, 6, 9}));
  CHECK(canonical_resolving_set(8) == rim({1, 5, 7}));
  CHECK(canonical_resolving_set(7) == rim({1, 5, 7}));
  CHECK(canonical_resolving_set(12) == rim({1, 5, 7, 10, 12}));
  CHECK_THROWS_AS(canonical_resolving_set(6), DomainError);

  Graph w11 = testutil::wheel(11);
  CHECK(!is_resolving(w11, rim({1, 4, 8, 10})));
  CHECK(is_minimal_resolving(w11, rim({1, 4, 6, 10})));
}

TEST_CASE("canonical sets have size floor((2n+2)/5) and are minimal") {
  for (int n = 7; n <= 30; ++n) {
    VertexSet s = canonical_resolving_set(n);
    CHECK(static_cast<int>(s.size()) == (2 * n + 2) / 5);
    CHECK(is_resolving_wheel(n, s));
  }
  for (int n = 7; n <= 12; ++n) {
    CHECK(is_minimal_resolving(testutil::wheel(n), canonical_resolving_set(n)));
  }
}

TEST_CASE("exchange witnesses per residue class") {
  auto [s8, r8] = resolving_exchange_witness(8);
  CHECK(s8 == rim({1, 5, 7}));
  CHECK(r8 == 7);  // label 8
  auto [s10, r10] = resolving_exchange_witness(10);
  CHECK(s10 == rim({1, 4, 6, 9}));
  CHECK(r10 == 1);  // label 2
  auto [s11, r11] = resolving_exchange_witness(11);
  CHECK(s11 == rim({1, 4, 6, 10}));
  CHECK(r11 == 1);  // label 2
  CHECK_THROWS_AS(resolving_exchange_witness(7), DomainError);

  for (int n = 8; n <= 12; ++n) {
    auto [s, r] = resolving_exchange_witness(n);
    CHECK(swap_candidates(testutil::wheel(n), SetKind::resolving, s, r).empty());
  }
}

TEST_CASE("the n = 5k+4 shortcut pair is not a witness; the search finds one") {
  // Swapping the far landmark out of {1,4,6,9} for 3 still resolves W_9, so
  // the (canonical, 3) pair certifies nothing; the searched witness does.
  Graph w9 = testutil::wheel(9);
  CHECK(swap_candidates(w9, SetKind::resolving, rim({1, 4, 6, 9}), 2) ==
        std::vector<int>{8});
  CHECK(is_minimal_resolving(w9, rim({1, 3, 4, 6})));

  auto [s9, r9] = resolving_exchange_witness(9);
  CHECK(s9 == rim({1, 3, 5, 7}));
  CHECK(r9 == 3);  // label 4
  CHECK(swap_candidates(w9, SetKind::resolving, s9, r9).empty());
}

TEST_CASE("wheel determining pairs") {
  MinimalSetCensus c5 = wheel_determining_pairs(5);
  CHECK(c5.sets.size() == 10);
  MinimalSetCensus c6 = wheel_determining_pairs(6);
  CHECK(c6.sets.size() == 12);
  MinimalSetCensus c8 = wheel_determining_pairs(8);
  CHECK(c8.sets.size() == 24);
  CHECK_THROWS_AS(wheel_determining_pairs(3), DomainError);

  for (int n = 4; n <= 10; ++n) {
    Graph wheel = testutil::wheel(n);
    MinimalSetCensus expected = minimal_determining_sets(wheel, wheel.vertex_count());
    CHECK(wheel_determining_pairs(n).sets == expected.sets);
  }
}

TEST_CASE("determining exchange holds in wheels, resolving exchange fails") {
  for (int n = 4; n <= 9; ++n) {
    CHECK(exchange_property(testutil::wheel(n), SetKind::determining).holds);
  }
  for (int n = 8; n <= 10; ++n) {
    CHECK(!exchange_property(testutil::wheel(n), SetKind::resolving).holds);
  }
  // n = 7 carries no published claim either way; record the oracle verdict
  ExchangeReport w7 = exchange_property(testutil::wheel(7), SetKind::resolving);
  MESSAGE("W_7 resolving exchange verdict: ", w7.holds);
}
