#ifndef EXLAB_OUTERPLANAR_HPP
#define EXLAB_OUTERPLANAR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exlab/automorphism.hpp"
#include "exlab/determining.hpp"
#include "exlab/graph.hpp"

namespace exlab {

// No K4 minor and no K23 minor, by bounded branch-set search (n <= 16).
bool is_outerplanar(const Graph& g);

// The unique Hamilton cycle of a 2-connected outerplanar graph (n >= 3),
// as a vertex sequence starting at 0.  Finding more than one cycle is an
// internal invariant violation and is reported, never ignored.
std::vector<int> hamilton_cycle(const Graph& g);

bool is_two_connected(const Graph& g);

// Each automorphism tagged as a rotation or reflection of the Hamilton
// cycle.  K2 gets its nontrivial automorphism tagged as a reflection.
struct CycleAction {
  std::vector<int> cycle_order;
  struct Action {
    enum class Type { identity, rotation, reflection };
    Type type{};
    int amount = 0;  // rotation offset or reflection axis (in cycle positions)
    Permutation perm;
    std::vector<int> fixed_vertices;  // reflections only (at most two)
  };
  std::vector<Action> actions;
};

CycleAction classify_cycle_action(const Graph& g);

// Outcome of the exchange-property decisions, with the witnessing features.
struct ExchangeEvidence {
  bool holds = true;
  std::string center_type;  // "block" or "cutvertex" (2-connected: "block")
  VertexSet central_block;
  std::optional<bool> stab_trivial;                 // pointwise Stab(B) in Aut(G)
  std::optional<int> moved_by_all;                  // vertex moved by every reflection
  std::optional<std::pair<int, int>> fixed_pair;    // fixed by different reflections
  std::string note;
};

// Exchange fails in a 2-connected outerplanar graph iff some vertex is moved
// by every reflection while two vertices are fixed by different reflections.
ExchangeEvidence exchange_decision_2connected(const Graph& g);

// The only minimal determining sets of a 2-connected outerplanar graph with
// nontrivial automorphisms: moved-by-every-reflection singletons and pairs
// fixed by different reflections.
MinimalSetCensus minimal_determining_sets_2connected(const Graph& g);

// ---------------------------------------------------------------------------
// Block-cutvertex machinery

struct BlockCutTree {
  std::vector<VertexSet> blocks;  // 2-connected blocks, K2 edges included
  std::vector<int> cutvertices;   // sorted vertex ids
  std::vector<std::vector<int>> block_cuts;  // per block: cutvertex ids in it
  std::vector<std::vector<int>> cut_blocks;  // per cutvertex (list index): block indices
  bool center_is_block = true;
  int center_block = -1;      // block index, when center_is_block
  int center_cutvertex = -1;  // vertex id, otherwise
};

BlockCutTree block_cut_tree(const Graph& g);

struct Blockbranch {
  int attach_vertex = -1;
  VertexSet vertices;  // includes attach_vertex
  bool trivial = false;
};

struct BlockbranchDecomposition {
  std::vector<Blockbranch> branches;
  std::vector<std::vector<int>> iso_classes;  // branch indices, grouped
};

// The blockbranches hanging at a cutvertex, partitioned by rooted graph
// isomorphism anchored at the attach vertex.
BlockbranchDecomposition blockbranches_at(const Graph& g, const BlockCutTree& bct,
                                          int v);

// Aut_G(B) = Invar(B)/Stab(B), re-indexed over sorted block vertices.
AutGroup block_quotient(const Graph& g, const VertexSet& block);
AutGroup block_quotient(const AutGroup& aut, const VertexSet& block);

// U is block determining iff its pointwise stabilizer in Aut_G(B) is trivial.
bool is_block_determining(const Graph& g, const VertexSet& block, const VertexSet& u);
bool is_block_determining(const AutGroup& aut, const VertexSet& block,
                          const VertexSet& u);

// Determining-set criteria for a connected outerplanar graph: every block
// sees a block determining set of attachment vertices, and at every
// cutvertex all but one blockbranch per isomorphism class holds an S-vertex.
// The second form reuses a precomputed group and tree for sweeps.
bool is_determining_outerplanar(const Graph& g, const VertexSet& s);
bool is_determining_outerplanar(const Graph& g, const AutGroup& aut,
                                const BlockCutTree& bct, const VertexSet& s);

// Exchange fails iff the block-cutvertex tree centers on a block with
// trivial pointwise stabilizer that has a vertex moved by every reflection
// of Aut_G(B) and two vertices fixed by different reflections.
ExchangeEvidence exchange_decision_outerplanar(const Graph& g);

}  // namespace exlab

#endif
