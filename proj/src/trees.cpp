#include "exlab/trees.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace exlab {

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) &&
         g.edge_count() == g.vertex_count() - 1;
}

bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

namespace {

void require_tree(const Graph& g, const char* op) {
  if (!is_tree(g)) throw DomainError(std::string(op) + ": input is not a tree");
}

// Component of tree - {v} containing `start`, plus v itself.
VertexSet branch_vertices(const Graph& tree, int v, int start) {
  std::vector<bool> seen(tree.vertex_count(), false);
  seen[v] = true;
  seen[start] = true;
  std::deque<int> queue{start};
  VertexSet out{v, start};
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    for (int u : tree.neighbors(at)) {
      if (!seen[u]) {
        seen[u] = true;
        out.push_back(u);
        queue.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool branch_is_path_graph(const Graph& tree, const VertexSet& branch, int root) {
  // a branch is a tree containing the root as a leaf; it is a path iff no
  // vertex other than the root has degree above two
  for (int u : branch) {
    if (u == root) continue;
    if (tree.degree(u) > 2) return false;
  }
  return true;
}

// Canonical rooted-tree encoding ("(" + sorted child encodings + ")").
std::string encode_rooted(const Graph& tree, int at, int parent) {
  std::vector<std::string> child_codes;
  for (int u : tree.neighbors(at)) {
    if (u != parent) child_codes.push_back(encode_rooted(tree, u, at));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const std::string& code : child_codes) out += code;
  out += ")";
  return out;
}

// The far endpoint (a leaf of the tree) of a branch path rooted at v.
int branch_path_leaf(const Graph& tree, const VertexSet& branch_path, int v) {
  for (int u : branch_path) {
    if (u != v && tree.degree(u) == 1) return u;
  }
  throw DomainError("branch path without a leaf endpoint");
}

int count_in_branch(const VertexSet& s, const VertexSet& branch, int root) {
  int count = 0;
  for (int u : s) {
    if (u != root && std::binary_search(branch.begin(), branch.end(), u)) ++count;
  }
  return count;
}

}  // namespace

std::vector<int> tree_center(const Graph& tree) {
  require_tree(tree, "tree_center");
  int n = tree.vertex_count();
  if (n == 1) return {0};
  std::vector<int> degree(n);
  std::deque<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::deque<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int leaf : layer) {
      degree[leaf] = 0;
      for (int u : tree.neighbors(leaf)) {
        if (degree[u] > 0 && --degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> center(layer.begin(), layer.end());
  std::sort(center.begin(), center.end());
  return center;
}

Graph normalize_center(const Graph& tree) {
  require_tree(tree, "normalize_center");
  std::vector<int> center = tree_center(tree);
  if (center.size() == 1) return tree;
  return subdivide_edge(tree, center[0], center[1]);
}

BranchDecomposition branch_iso_classes(const Graph& tree, int v) {
  require_tree(tree, "branch_iso_classes");
  if (v < 0 || v >= tree.vertex_count()) throw ParameterError("vertex out of range");
  BranchDecomposition out;
  out.root = v;
  for (int start : tree.neighbors(v)) {
    VertexSet branch = branch_vertices(tree, v, start);
    out.branch_is_path.push_back(branch_is_path_graph(tree, branch, v));
    // encode the branch as rooted at v: v has the single child `start`
    out.encodings.push_back("(" + encode_rooted(tree, start, v) + ")");
    out.branches.push_back(std::move(branch));
  }
  std::map<std::string, std::vector<int>> classes;
  for (std::size_t i = 0; i < out.branches.size(); ++i) {
    classes[out.encodings[i]].push_back(static_cast<int>(i));
  }
  for (auto& [code, members] : classes) out.iso_classes.push_back(members);
  return out;
}

std::vector<ExteriorMajorVertex> exterior_major_vertices(const Graph& tree) {
  require_tree(tree, "exterior_major_vertices");
  std::vector<ExteriorMajorVertex> out;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) < 3) continue;
    ExteriorMajorVertex emv;
    emv.vertex = v;
    for (int start : tree.neighbors(v)) {
      VertexSet branch = branch_vertices(tree, v, start);
      if (branch_is_path_graph(tree, branch, v)) {
        emv.branch_paths.push_back(std::move(branch));
      }
    }
    if (!emv.branch_paths.empty()) out.push_back(std::move(emv));
  }
  return out;
}

bool is_minimal_resolving_tree(const Graph& tree, const VertexSet& s) {
  require_tree(tree, "is_minimal_resolving_tree");
  if (is_path_graph(tree)) {
    throw DomainError(
        "is_minimal_resolving_tree: paths admit minimal resolving sets of "
        "different sizes; use the brute-force oracle");
  }
  VertexSet sorted = make_vertex_set(s, tree.vertex_count());
  auto emvs = exterior_major_vertices(tree);

  std::vector<bool> accounted(tree.vertex_count(), false);
  for (const auto& emv : emvs) {
    int empty_paths = 0;
    for (const VertexSet& bp : emv.branch_paths) {
      int count = count_in_branch(sorted, bp, emv.vertex);
      if (count == 0) {
        ++empty_paths;
      } else if (count == 1) {
        for (int u : sorted) {
          if (u != emv.vertex && std::binary_search(bp.begin(), bp.end(), u)) {
            accounted[u] = true;
          }
        }
      } else {
        return false;  // two landmarks on one branch path
      }
    }
    if (empty_paths != 1) return false;  // precisely all but one
  }
  for (int u : sorted) {
    if (!accounted[u]) return false;  // S contains nothing else
  }
  return true;
}

VertexSet construct_minimal_resolving_tree(const Graph& tree) {
  require_tree(tree, "construct_minimal_resolving_tree");
  if (is_path_graph(tree)) {
    throw DomainError("construct_minimal_resolving_tree: input is a path");
  }
  VertexSet out;
  for (const auto& emv : exterior_major_vertices(tree)) {
    // exempt the branch path with the largest canonical encoding, breaking
    // ties by the smallest vertex id it contains
    int exempt = -1;
    std::string best_code;
    int best_min_vertex = -1;
    for (std::size_t i = 0; i < emv.branch_paths.size(); ++i) {
      const VertexSet& bp = emv.branch_paths[i];
      int attach = -1;
      for (int u : tree.neighbors(emv.vertex)) {
        if (std::binary_search(bp.begin(), bp.end(), u)) attach = u;
      }
      std::string code = "(" + encode_rooted(tree, attach, emv.vertex) + ")";
      int min_vertex = bp[0] == emv.vertex ? bp[1] : bp[0];
      if (exempt < 0 || code > best_code ||
          (code == best_code && min_vertex < best_min_vertex)) {
        best_code = code;
        best_min_vertex = min_vertex;
        exempt = static_cast<int>(i);
      }
    }
    for (std::size_t i = 0; i < emv.branch_paths.size(); ++i) {
      if (static_cast<int>(i) == exempt) continue;
      out.push_back(branch_path_leaf(tree, emv.branch_paths[i], emv.vertex));
    }
  }
  return make_vertex_set(out, tree.vertex_count());
}

bool is_determining_tree(const Graph& tree, const VertexSet& s) {
  require_tree(tree, "is_determining_tree");
  VertexSet sorted = make_vertex_set(s, tree.vertex_count());
  Graph normalized = normalize_center(tree);
  for (int v = 0; v < normalized.vertex_count(); ++v) {
    BranchDecomposition decomposition = branch_iso_classes(normalized, v);
    for (const auto& iso_class : decomposition.iso_classes) {
      int lacking = 0;
      for (int branch_index : iso_class) {
        if (count_in_branch(sorted, decomposition.branches[branch_index], v) == 0) {
          ++lacking;
        }
      }
      if (lacking > 1) return false;
    }
  }
  return true;
}

int tree_exchange_swap(const Graph& tree, SetKind kind, const VertexSet& s, int r) {
  require_tree(tree, "tree_exchange_swap");
  VertexSet sorted = make_vertex_set(s, tree.vertex_count());
  if (r < 0 || r >= tree.vertex_count()) throw ParameterError("r out of range");
  if (std::binary_search(sorted.begin(), sorted.end(), r)) return r;

  if (kind == SetKind::resolving) {
    if (is_path_graph(tree)) {
      throw DomainError("tree_exchange_swap: resolving exchange on a path");
    }
    if (!is_minimal_resolving_tree(tree, sorted)) {
      throw ParameterError("tree_exchange_swap: S is not a minimal resolving set");
    }
    // r lies on a branch path of some exterior major vertex
    for (const auto& emv : exterior_major_vertices(tree)) {
      for (const VertexSet& bp : emv.branch_paths) {
        if (r == emv.vertex || !std::binary_search(bp.begin(), bp.end(), r)) continue;
        // same branch path first, else the set's vertex on a sibling path
        for (int u : sorted) {
          if (u != emv.vertex && std::binary_search(bp.begin(), bp.end(), u)) return u;
        }
        for (const VertexSet& other : emv.branch_paths) {
          if (&other == &bp) continue;
          for (int u : sorted) {
            if (u != emv.vertex &&
                std::binary_search(other.begin(), other.end(), u)) {
              return u;
            }
          }
        }
        throw ParameterError("tree_exchange_swap: no swap vertex found at the EMV");
      }
    }
    throw ParameterError(
        "tree_exchange_swap: r is not on any branch path, so it belongs to no "
        "minimal resolving set");
  }

  // determining kind: work on the center-normalized tree
  Graph normalized = normalize_center(tree);
  if (!is_minimal_determining(normalized, sorted)) {
    throw ParameterError("tree_exchange_swap: S is not a minimal determining set");
  }
  int center = tree_center(normalized)[0];
  DistanceMatrix dist = all_pairs_distances(normalized);
  // vertices on the path from r to the center, excluding r
  std::vector<int> path;
  for (int at = r; at != center;) {
    int next = -1;
    for (int u : normalized.neighbors(at)) {
      if (dist[u][center] == dist[at][center] - 1) {
        next = u;
        break;
      }
    }
    path.push_back(next);
    at = next;
  }
  for (int v : path) {
    BranchDecomposition decomposition = branch_iso_classes(normalized, v);
    int home = -1;
    for (std::size_t i = 0; i < decomposition.branches.size(); ++i) {
      const VertexSet& branch = decomposition.branches[i];
      if (std::binary_search(branch.begin(), branch.end(), r)) {
        home = static_cast<int>(i);
        break;
      }
    }
    for (const auto& iso_class : decomposition.iso_classes) {
      if (std::find(iso_class.begin(), iso_class.end(), home) == iso_class.end()) {
        continue;
      }
      if (iso_class.size() < 2) break;  // trivial class: keep walking to the center
      // r sits in a nontrivial isomorphism class at v
      const VertexSet& home_branch = decomposition.branches[home];
      for (int u : sorted) {
        if (u != v && std::binary_search(home_branch.begin(), home_branch.end(), u)) {
          return u;
        }
      }
      for (int branch_index : iso_class) {
        if (branch_index == home) continue;
        const VertexSet& sibling = decomposition.branches[branch_index];
        for (int u : sorted) {
          if (u != v && std::binary_search(sibling.begin(), sibling.end(), u)) {
            return u;
          }
        }
      }
      throw ParameterError("tree_exchange_swap: no swap vertex found in the class");
    }
  }
  throw ParameterError(
      "tree_exchange_swap: r is fixed by every automorphism, so it belongs to "
      "no minimal determining set");
}

}  // namespace exlab
