#ifndef EXLAB_AUTOMORPHISM_HPP
#define EXLAB_AUTOMORPHISM_HPP

#include <vector>

#include "exlab/graph.hpp"

namespace exlab {

// A vertex permutation as an image array: perm[v] is where v goes.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse_permutation(const Permutation& perm);
bool is_automorphism(const Graph& g, const Permutation& perm);

struct AutGroupCaps {
  int vertex_cap = 64;
  long long element_cap = 1'000'000;
};

// A permutation group at desk scale: the full element list is the working
// representation, generators are kept for reporting.
struct AutGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, identity first

  std::size_t order() const { return elements.size(); }
  bool trivial() const { return elements.size() <= 1; }
};

// Full automorphism group by backtracking vertex-mapping search, pruned by
// an iterated (degree, distance multiset) vertex invariant.  Deterministic:
// vertices are mapped in ascending order and candidate targets are tried in
// ascending order.
AutGroup automorphism_group(const Graph& g, const AutGroupCaps& caps = {});

// Subgroup fixing every vertex of s.
AutGroup pointwise_stabilizer(const AutGroup& group, const VertexSet& s);

// Subgroup mapping the set onto itself.
AutGroup invariant_subgroup(const AutGroup& group, const VertexSet& vs);

// Distinct restrictions to vs (which must be invariant under every element),
// re-indexed over sorted(vs).  Realizes Invar(B)/Stab(B) when the input is
// the invariant subgroup of vs.
AutGroup quotient_action(const AutGroup& group, const VertexSet& vs);

}  // namespace exlab

#endif
