#ifndef EXLAB_DETERMINING_HPP
#define EXLAB_DETERMINING_HPP

#include <map>
#include <vector>

#include "exlab/automorphism.hpp"
#include "exlab/budget.hpp"
#include "exlab/graph.hpp"

namespace exlab {

enum class SetKind { determining, resolving };

std::string set_kind_name(SetKind kind);
SetKind parse_set_kind(std::string_view name);

// Every minimal set of the given kind up to a size bound, in lexicographic
// order, with the size histogram and the number of orbits under Aut(G).
struct MinimalSetCensus {
  SetKind kind{};
  std::vector<VertexSet> sets;
  std::map<int, int> size_histogram;
  int orbit_count = 0;

  static MinimalSetCensus from_sets(SetKind kind, std::vector<VertexSet> sets,
                                    const AutGroup& group);
};

// S is determining iff its pointwise stabilizer in Aut(G) is trivial.
bool is_determining(const AutGroup& group, const VertexSet& s);
bool is_determining(const Graph& g, const VertexSet& s);

bool is_minimal_determining(const AutGroup& group, const VertexSet& s);
bool is_minimal_determining(const Graph& g, const VertexSet& s);

// Minimum determining-set size by ascending-size subset search with
// incremental stabilizer pruning.
int determining_number(const Graph& g, SearchBudget& budget);
int determining_number(const Graph& g);

// All minimal determining sets of size <= max_size.
MinimalSetCensus minimal_determining_sets(const Graph& g, int max_size,
                                          SearchBudget& budget);
MinimalSetCensus minimal_determining_sets(const Graph& g, int max_size);

// Orbit count of the census sets under the group action.
int orbit_count_of_sets(const AutGroup& group, const std::vector<VertexSet>& sets);

}  // namespace exlab

#endif
