#ifndef EXLAB_BUDGET_HPP
#define EXLAB_BUDGET_HPP

#include <cstdint>

#include "exlab/errors.hpp"

namespace exlab {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Counts predicate evaluations (subset-stabilizer checks, resolving checks)
// across a search and aborts once the limit is crossed.  One budget can be
// shared by the sub-searches of a composite operation.
class SearchBudget {
 public:
  SearchBudget() = default;
  explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw BudgetError("search budget exceeded (" + std::to_string(limit_) +
                        " predicate evaluations)");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_ = kDefaultSearchBudget;
  std::uint64_t used_ = 0;
};

}  // namespace exlab

#endif
