#ifndef EXLAB_WHEELS_HPP
#define EXLAB_WHEELS_HPP

#include <utility>
#include <vector>

#include "exlab/determining.hpp"
#include "exlab/graph.hpp"

namespace exlab {

// Everything here uses 0-based labels: rim vertices 0..n-1 in cycle order,
// hub = n.  (The source criteria label the rim 1..n; fixtures shift by one.)

// The cyclic runs of rim vertices strictly between consecutive landmarks.
// gaps[i] follows landmarks[i]; empty runs are kept, so there are exactly
// |landmarks| gaps covering n - |landmarks| rim vertices.
struct GapStructure {
  int rim_size = 0;
  VertexSet landmarks;
  std::vector<std::vector<int>> gaps;
};

GapStructure rim_gaps(int n, const VertexSet& s);

// Gap criteria for a rim subset to resolve W_n (n >= 7): no gap of size four
// or more, at most one gap of size three, and every gap of size above one has
// both neighboring gaps of size at most one.  Candidates containing the hub
// belong to the brute-force oracle, not here.
bool is_resolving_wheel(int n, const VertexSet& s);

// The published minimal resolving set family for W_n, chosen by n mod 5
// (with the n = 8 special case), in 0-based rim labels.
VertexSet canonical_resolving_set(int n);

// (canonical set, r) with no valid swap, certifying that resolving sets lack
// the exchange property in W_n for n >= 8; certified on construction.
std::pair<VertexSet, int> resolving_exchange_witness(int n);

// All minimal determining sets of W_n (n >= 4): the non-antipodal rim pairs.
MinimalSetCensus wheel_determining_pairs(int n);

}  // namespace exlab

#endif
