#ifndef EXLAB_TREES_HPP
#define EXLAB_TREES_HPP

#include <string>
#include <vector>

#include "exlab/determining.hpp"
#include "exlab/graph.hpp"

namespace exlab {

bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);

// One or two adjacent central vertices of a tree.
std::vector<int> tree_center(const Graph& tree);

// Subdivides the central edge of a bicentral tree (new vertex id n) so the
// result has a unique center; unicentral trees come back unchanged.  The
// minimal determining sets are unaffected.
Graph normalize_center(const Graph& tree);

// The branches at v (components of T - v, each with v added back), ordered by
// their attachment neighbor, with per-branch path flags and the partition
// into rooted-isomorphism classes.
struct BranchDecomposition {
  int root = -1;
  std::vector<VertexSet> branches;
  std::vector<bool> branch_is_path;
  std::vector<std::string> encodings;          // canonical rooted encoding per branch
  std::vector<std::vector<int>> iso_classes;   // branch indices, grouped
};

BranchDecomposition branch_iso_classes(const Graph& tree, int v);

// Degree >= 3 vertex owning at least one branch path.
struct ExteriorMajorVertex {
  int vertex = -1;
  std::vector<VertexSet> branch_paths;
};

std::vector<ExteriorMajorVertex> exterior_major_vertices(const Graph& tree);

// Slater's characterization: S is a minimal resolving set iff, at every
// exterior major vertex, exactly one vertex of S sits in each of all but one
// of its branch paths, and S contains nothing else.  Paths are rejected
// (DomainError): they admit minimal resolving sets of different sizes, so the
// characterization cannot apply to them.
bool is_minimal_resolving_tree(const Graph& tree, const VertexSet& s);

// Deterministic witness: the far leaf of every branch path except the
// exempted one (largest canonical encoding, ties by smallest vertex id).
VertexSet construct_minimal_resolving_tree(const Graph& tree);

// Determining-set characterization on the center-normalized tree: at every
// vertex, all but one branch of each isomorphism class must hold an S-vertex.
bool is_determining_tree(const Graph& tree, const VertexSet& s);

// Constructive exchange: the element of s whose swap with r keeps the set
// minimal of the kind, following the branch-path / isomorphic-branch proofs.
int tree_exchange_swap(const Graph& tree, SetKind kind, const VertexSet& s, int r);

}  // namespace exlab

#endif
