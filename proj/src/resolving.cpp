#include "exlab/resolving.hpp"

#include <algorithm>

#include "set_search.hpp"

namespace exlab {

DistanceMatrix connected_distances(const Graph& g) {
  DistanceMatrix dist = all_pairs_distances(g);
  for (const auto& row : dist) {
    for (int d : row) {
      if (d == kUnreachable) {
        throw DomainError("resolving sets are defined for connected graphs only");
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> distance_vectors(const DistanceMatrix& dist,
                                               const VertexSet& s) {
  int n = static_cast<int>(dist.size());
  std::vector<std::vector<int>> vectors(n);
  for (int v = 0; v < n; ++v) {
    vectors[v].reserve(s.size());
    for (int landmark : s) {
      if (landmark < 0 || landmark >= n) throw ParameterError("landmark out of range");
      vectors[v].push_back(dist[landmark][v]);
    }
  }
  return vectors;
}

bool is_resolving(const DistanceMatrix& dist, const VertexSet& s) {
  auto vectors = distance_vectors(dist, s);
  std::sort(vectors.begin(), vectors.end());
  return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

bool is_resolving(const Graph& g, const VertexSet& s) {
  return is_resolving(connected_distances(g), s);
}

bool is_minimal_resolving(const DistanceMatrix& dist, const VertexSet& s) {
  if (!is_resolving(dist, s)) return false;
  VertexSet reduced;
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    reduced.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != skip) reduced.push_back(s[i]);
    }
    if (is_resolving(dist, reduced)) return false;
  }
  return true;
}

bool is_minimal_resolving(const Graph& g, const VertexSet& s) {
  return is_minimal_resolving(connected_distances(g), s);
}

int metric_dimension(const Graph& g, SearchBudget& budget) {
  DistanceMatrix dist = connected_distances(g);
  int n = g.vertex_count();
  VertexSet chosen;
  auto search = [&](auto&& self, int next, int remaining) -> bool {
    if (remaining == 0) {
      budget.charge();
      return is_resolving(dist, chosen);
    }
    for (int v = next; v <= n - remaining; ++v) {
      chosen.push_back(v);
      if (self(self, v + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 0; k <= n; ++k) {
    chosen.clear();
    if (search(search, 0, k)) return k;
  }
  return n;  // unreachable: the full vertex set resolves
}

int metric_dimension(const Graph& g) {
  SearchBudget budget;
  return metric_dimension(g, budget);
}

MinimalSetCensus minimal_resolving_sets(const Graph& g, int max_size,
                                        SearchBudget& budget) {
  DistanceMatrix dist = connected_distances(g);
  auto result = detail::enumerate_minimal_full_sets(
      g.vertex_count(), max_size,
      [&dist](const VertexSet& s) { return is_resolving(dist, s); }, budget);
  AutGroup group = automorphism_group(g);
  return MinimalSetCensus::from_sets(SetKind::resolving, std::move(result.minimal_sets),
                                     group);
}

MinimalSetCensus minimal_resolving_sets(const Graph& g, int max_size) {
  SearchBudget budget;
  return minimal_resolving_sets(g, max_size, budget);
}

}  // namespace exlab
