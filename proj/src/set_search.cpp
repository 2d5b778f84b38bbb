#include "set_search.hpp"

namespace exlab::detail {

namespace {

struct Enumerator {
  int n;
  int max_size;
  const std::function<bool(const VertexSet&)>& is_full;
  SearchBudget& budget;
  EnumerationResult result;

  bool full(const VertexSet& s) {
    budget.charge();
    return is_full(s);
  }

  // current is independent and not full
  void extend(const VertexSet& current) {
    VertexSet child = current;
    child.push_back(0);
    for (int v = current.empty() ? 0 : current.back() + 1; v < n; ++v) {
      child.back() = v;
      // child minus v is `current`, already known not full; the remaining
      // one-element deletions must all be non-full for independence
      bool independent = true;
      VertexSet deletion;
      deletion.reserve(child.size() - 1);
      for (std::size_t skip = 0; skip + 1 < child.size(); ++skip) {
        deletion.clear();
        for (std::size_t i = 0; i < child.size(); ++i) {
          if (i != skip) deletion.push_back(child[i]);
        }
        if (full(deletion)) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      if (static_cast<int>(child.size()) > max_size) {
        // an independent set past the bound certifies the census is truncated
        result.complete = false;
        continue;
      }
      if (full(child)) {
        result.minimal_sets.push_back(child);
      } else {
        extend(child);
      }
    }
  }
};

}  // namespace

EnumerationResult enumerate_minimal_full_sets(
    int n, int max_size, const std::function<bool(const VertexSet&)>& is_full,
    SearchBudget& budget) {
  Enumerator enumerator{n, max_size, is_full, budget, {}};
  enumerator.result.complete = true;
  budget.charge();
  if (is_full({})) {
    enumerator.result.minimal_sets.push_back({});
  } else {
    enumerator.extend({});
  }
  return enumerator.result;
}

}  // namespace exlab::detail
