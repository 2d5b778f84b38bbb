#ifndef EXLAB_SRC_STAB_ORACLE_HPP
#define EXLAB_SRC_STAB_ORACLE_HPP

#include <vector>

#include "exlab/automorphism.hpp"

namespace exlab::detail {

// Point-stabilizer cache over a fully enumerated group.  A set's stabilizer
// is the chain of single-point filters starting from the cached stabilizer
// of its first element, which keeps repeated subset queries cheap.
class StabilizerOracle {
 public:
  explicit StabilizerOracle(const AutGroup& group) : group_(group) {
    point_stabs_.resize(group.degree);
    for (int v = 0; v < group.degree; ++v) {
      for (std::size_t i = 0; i < group.elements.size(); ++i) {
        if (group.elements[i][v] == v) point_stabs_[v].push_back(static_cast<int>(i));
      }
    }
  }

  // indices into group.elements of the elements fixing s pointwise
  std::vector<int> stabilizer_indices(const VertexSet& s) const {
    if (s.empty()) {
      std::vector<int> all(group_.elements.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
      return all;
    }
    std::vector<int> current = point_stabs_[s[0]];
    for (std::size_t k = 1; k < s.size() && current.size() > 1; ++k) {
      current = filter(current, s[k]);
    }
    return current;
  }

  std::vector<int> filter(const std::vector<int>& indices, int v) const {
    std::vector<int> kept;
    kept.reserve(indices.size());
    for (int i : indices) {
      if (group_.elements[i][v] == v) kept.push_back(i);
    }
    return kept;
  }

  bool trivial_stabilizer(const VertexSet& s) const {
    return stabilizer_indices(s).size() <= 1;
  }

  const AutGroup& group() const { return group_; }

 private:
  const AutGroup& group_;
  std::vector<std::vector<int>> point_stabs_;
};

}  // namespace exlab::detail

#endif
