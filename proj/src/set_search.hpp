#ifndef EXLAB_SRC_SET_SEARCH_HPP
#define EXLAB_SRC_SET_SEARCH_HPP

#include <functional>
#include <vector>

#include "exlab/budget.hpp"
#include "exlab/graph.hpp"

// Shared search core for the minimal-set censuses.  Determining and resolving
// sets both sit over a hereditary independence system (S is independent when
// no one-element deletion is still determining/resolving), so minimal sets of
// either kind are exactly the maximal independent sets and can be enumerated
// by one DFS that prunes every non-independent branch.

namespace exlab::detail {

struct EnumerationResult {
  std::vector<VertexSet> minimal_sets;  // lexicographic order
  bool complete = false;  // true when no independent set of size max_size+1 exists
};

// is_full(T) decides the kind's monotone property (determining / resolving).
// One budget unit is charged per is_full evaluation.
EnumerationResult enumerate_minimal_full_sets(
    int n, int max_size, const std::function<bool(const VertexSet&)>& is_full,
    SearchBudget& budget);

}  // namespace exlab::detail

#endif
