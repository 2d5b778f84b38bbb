#include "exlab/exchange.hpp"

#include <algorithm>
#include <unordered_set>

#include "set_search.hpp"
#include "stab_oracle.hpp"

namespace exlab {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Complete census of minimal sets of the kind (every size).  The enumeration
// is hereditary, so running with the bound n is exact.
std::vector<VertexSet> complete_census(const Graph& g, SetKind kind,
                                       SearchBudget& budget) {
  int n = g.vertex_count();
  if (kind == SetKind::determining) {
    AutGroup group = automorphism_group(g);
    detail::StabilizerOracle oracle(group);
    auto result = detail::enumerate_minimal_full_sets(
        n, n, [&oracle](const VertexSet& s) { return oracle.trivial_stabilizer(s); },
        budget);
    return std::move(result.minimal_sets);
  }
  DistanceMatrix dist = connected_distances(g);
  auto result = detail::enumerate_minimal_full_sets(
      n, n, [&dist](const VertexSet& s) { return is_resolving(dist, s); }, budget);
  return std::move(result.minimal_sets);
}

}  // namespace

ExchangeReport exchange_property(const Graph& g, SetKind kind, SearchBudget& budget) {
  std::vector<VertexSet> census = complete_census(g, kind, budget);

  ExchangeReport report;
  report.kind = kind;
  for (const VertexSet& s : census) {
    report.size_histogram[static_cast<int>(s.size())]++;
  }
  report.equal_cardinality = report.size_histogram.size() <= 1;

  std::unordered_set<VertexSet, VecHash> census_index(census.begin(), census.end());
  VertexSet coverage;
  for (const VertexSet& s : census) coverage.insert(coverage.end(), s.begin(), s.end());
  std::sort(coverage.begin(), coverage.end());
  coverage.erase(std::unique(coverage.begin(), coverage.end()), coverage.end());

  for (const VertexSet& s : census) {
    for (int r : coverage) {
      if (std::binary_search(s.begin(), s.end(), r)) continue;  // swap r for itself
      bool swappable = false;
      VertexSet candidate;
      for (std::size_t skip = 0; skip < s.size() && !swappable; ++skip) {
        candidate.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) candidate.push_back(s[i]);
        }
        candidate.push_back(r);
        std::sort(candidate.begin(), candidate.end());
        swappable = census_index.contains(candidate);
      }
      if (!swappable) {
        report.holds = false;
        report.witness = ExchangeWitness{s, r};
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

ExchangeReport exchange_property(const Graph& g, SetKind kind) {
  SearchBudget budget;
  return exchange_property(g, kind, budget);
}

std::vector<int> swap_candidates(const Graph& g, SetKind kind, const VertexSet& s,
                                 int r) {
  VertexSet sorted = make_vertex_set(s, g.vertex_count());
  if (r < 0 || r >= g.vertex_count()) throw ParameterError("replacement vertex out of range");

  if (kind == SetKind::determining) {
    AutGroup group = automorphism_group(g);
    if (!is_minimal_determining(group, sorted)) {
      throw ParameterError("swap_candidates: S is not a minimal determining set");
    }
    std::vector<int> out;
    VertexSet candidate;
    for (std::size_t skip = 0; skip < sorted.size(); ++skip) {
      candidate.clear();
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i != skip) candidate.push_back(sorted[i]);
      }
      candidate.push_back(r);
      candidate = make_vertex_set(candidate, g.vertex_count());
      if (is_minimal_determining(group, candidate)) out.push_back(sorted[skip]);
    }
    return out;
  }

  DistanceMatrix dist = connected_distances(g);
  if (!is_minimal_resolving(dist, sorted)) {
    throw ParameterError("swap_candidates: S is not a minimal resolving set");
  }
  std::vector<int> out;
  VertexSet candidate;
  for (std::size_t skip = 0; skip < sorted.size(); ++skip) {
    candidate.clear();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i != skip) candidate.push_back(sorted[i]);
    }
    candidate.push_back(r);
    candidate = make_vertex_set(candidate, g.vertex_count());
    if (is_minimal_resolving(dist, candidate)) out.push_back(sorted[skip]);
  }
  return out;
}

}  // namespace exlab
