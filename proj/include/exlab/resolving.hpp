#ifndef EXLAB_RESOLVING_HPP
#define EXLAB_RESOLVING_HPP

#include "exlab/determining.hpp"

namespace exlab {

// Distances from every vertex to the landmarks of s, in s's sorted order.
std::vector<std::vector<int>> distance_vectors(const DistanceMatrix& dist,
                                               const VertexSet& s);

// S resolves a connected graph iff all distance vectors are pairwise distinct.
bool is_resolving(const DistanceMatrix& dist, const VertexSet& s);
bool is_resolving(const Graph& g, const VertexSet& s);

bool is_minimal_resolving(const DistanceMatrix& dist, const VertexSet& s);
bool is_minimal_resolving(const Graph& g, const VertexSet& s);

int metric_dimension(const Graph& g, SearchBudget& budget);
int metric_dimension(const Graph& g);

MinimalSetCensus minimal_resolving_sets(const Graph& g, int max_size,
                                        SearchBudget& budget);
MinimalSetCensus minimal_resolving_sets(const Graph& g, int max_size);

// Distance matrix of a connected graph; throws DomainError when disconnected
// (the resolving-set definition needs finite distances).
DistanceMatrix connected_distances(const Graph& g);

}  // namespace exlab

#endif
