#ifndef EXLAB_EXCHANGE_HPP
#define EXLAB_EXCHANGE_HPP

#include <map>
#include <optional>

#include "exlab/determining.hpp"
#include "exlab/resolving.hpp"

namespace exlab {

struct ExchangeWitness {
  VertexSet set;    // a minimal set S
  int replacement;  // r from another minimal set with no valid swap
};

struct ExchangeReport {
  SetKind kind{};
  bool holds = true;
  std::optional<ExchangeWitness> witness;  // lexicographically first failure
  std::map<int, int> size_histogram;       // over the complete minimal-set census
  bool equal_cardinality = true;
};

// Decides the exchange property by exhaustive check over the complete
// minimal-set census: for every minimal S, every census vertex r, some s in S
// must make S - {s} + {r} minimal again.  Throws BudgetError if the census
// cannot be completed within budget.
ExchangeReport exchange_property(const Graph& g, SetKind kind, SearchBudget& budget);
ExchangeReport exchange_property(const Graph& g, SetKind kind);

// All s in S whose swap with r yields a minimal set of the kind; an empty
// result certifies (S, r) as an exchange-failure witness.  S must be minimal.
std::vector<int> swap_candidates(const Graph& g, SetKind kind, const VertexSet& s,
                                 int r);

}  // namespace exlab

#endif
