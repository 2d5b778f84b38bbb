#include "exlab/outerplanar.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace exlab {

namespace {

constexpr int kOuterplanarCap = 16;

// ---------------------------------------------------------------------------
// Forbidden-minor search.  Branch sets are grown one adjacent vertex at a
// time toward the first unsatisfied required adjacency, so every reachable
// state keeps all sets connected.

struct MinorSearch {
  int n;
  std::vector<std::uint32_t> adj;
  const std::vector<std::pair<int, int>>& required;
  std::vector<std::uint32_t> sets;
  std::uint32_t used = 0;

  bool masks_adjacent(std::uint32_t a, std::uint32_t b) const {
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (adj[v] & b) return true;
    }
    return false;
  }

  std::uint32_t frontier(std::uint32_t set) const {
    std::uint32_t out = 0;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      out |= adj[std::countr_zero(rest)];
    }
    return out & ~used;
  }

  bool grow() {
    int pending = -1;
    for (std::size_t i = 0; i < required.size(); ++i) {
      if (!masks_adjacent(sets[required[i].first], sets[required[i].second])) {
        pending = static_cast<int>(i);
        break;
      }
    }
    if (pending < 0) return true;
    auto [a, b] = required[pending];
    for (int side : {a, b}) {
      std::uint32_t candidates = frontier(sets[side]);
      for (std::uint32_t rest = candidates; rest != 0; rest &= rest - 1) {
        std::uint32_t bit = rest & (~rest + 1);
        sets[side] |= bit;
        used |= bit;
        if (grow()) return true;
        sets[side] &= ~bit;
        used &= ~bit;
      }
    }
    return false;
  }
};

bool has_minor(const Graph& g, int parts,
               const std::vector<std::pair<int, int>>& required,
               const std::vector<std::vector<int>>& seed_tuples) {
  int n = g.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) adj[v] |= std::uint32_t(1) << u;
  }
  for (const auto& seeds : seed_tuples) {
    MinorSearch search{n, adj, required, std::vector<std::uint32_t>(parts, 0), 0};
    for (int i = 0; i < parts; ++i) {
      search.sets[i] = std::uint32_t(1) << seeds[i];
      search.used |= search.sets[i];
    }
    if (search.grow()) return true;
  }
  return false;
}

bool has_k4_minor(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  std::vector<std::pair<int, int>> required = {{0, 1}, {0, 2}, {0, 3},
                                               {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::vector<int>> seeds;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) seeds.push_back({a, b, c, d});
  return has_minor(g, 4, required, seeds);
}

bool has_k23_minor(const Graph& g) {
  int n = g.vertex_count();
  if (n < 5) return false;
  // parts 0,1 on one side, 2,3,4 on the other
  std::vector<std::pair<int, int>> required = {{0, 2}, {0, 3}, {0, 4},
                                               {1, 2}, {1, 3}, {1, 4}};
  std::vector<std::vector<int>> seeds;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < n; ++d) {
          if (d == a || d == b) continue;
          for (int e = d + 1; e < n; ++e) {
            if (e == a || e == b) continue;
            seeds.push_back({a, b, c, d, e});
          }
        }
      }
    }
  }
  return has_minor(g, 5, required, seeds);
}

void require_outerplanar(const Graph& g, const char* op) {
  if (!is_outerplanar(g)) {
    throw DomainError(std::string(op) + ": graph is not outerplanar");
  }
}

}  // namespace

bool is_outerplanar(const Graph& g) {
  int n = g.vertex_count();
  if (n > kOuterplanarCap) {
    throw BudgetError("outerplanarity search capped at " +
                      std::to_string(kOuterplanarCap) + " vertices");
  }
  if (g.edge_count() > std::max(0, 2 * n - 3)) return false;  // edge bound
  return !has_k4_minor(g) && !has_k23_minor(g);
}

// ---------------------------------------------------------------------------
// Hamilton cycle and dihedral classification

bool is_two_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  return block_cut_tree(g).blocks.size() == 1;
}

std::vector<int> hamilton_cycle(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3) throw DomainError("hamilton_cycle requires n >= 3");
  require_outerplanar(g, "hamilton_cycle");
  if (!is_two_connected(g)) throw DomainError("hamilton_cycle: graph is not 2-connected");

  std::vector<int> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  std::vector<std::vector<int>> found;
  auto search = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == n) {
      // canonical direction kills the reflected duplicate
      if (g.adjacent(path.back(), 0) && path[1] < path[n - 1]) found.push_back(path);
      return;
    }
    for (int u : g.neighbors(path.back())) {
      if (used[u]) continue;
      used[u] = true;
      path.push_back(u);
      self(self);
      path.pop_back();
      used[u] = false;
    }
  };
  search(search);
  if (found.size() != 1) {
    throw Error("hamilton_cycle: expected exactly one Hamilton cycle, found " +
                std::to_string(found.size()) +
                " (invariant violation for a 2-connected outerplanar graph)");
  }
  return found.front();
}

namespace {

// Tags each permutation as a rotation or reflection of the given cycle.
// Degree-2 sets follow the K2 convention: the swap counts as a reflection.
std::vector<CycleAction::Action> classify_on_cycle(
    const std::vector<Permutation>& elements, const std::vector<int>& cycle) {
  int m = static_cast<int>(cycle.size());
  std::vector<int> pos(m >= 1 ? *std::max_element(cycle.begin(), cycle.end()) + 1 : 0,
                       -1);
  for (int i = 0; i < m; ++i) pos[cycle[i]] = i;

  std::vector<CycleAction::Action> actions;
  for (const Permutation& perm : elements) {
    CycleAction::Action action;
    action.perm = perm;
    std::vector<int> mapped(m);
    for (int i = 0; i < m; ++i) mapped[i] = pos[perm[cycle[i]]];

    bool identity = true;
    for (int i = 0; i < m; ++i) identity = identity && mapped[i] == i;
    if (identity) {
      action.type = CycleAction::Action::Type::identity;
      actions.push_back(std::move(action));
      continue;
    }
    if (m == 2) {
      action.type = CycleAction::Action::Type::reflection;
      action.amount = 1;
      actions.push_back(std::move(action));
      continue;
    }
    bool rotation = true;
    int k = mapped[0];
    for (int i = 0; i < m; ++i) rotation = rotation && mapped[i] == (i + k) % m;
    if (rotation) {
      action.type = CycleAction::Action::Type::rotation;
      action.amount = k;
      actions.push_back(std::move(action));
      continue;
    }
    bool reflection = true;
    int axis = mapped[0];
    for (int i = 0; i < m; ++i) {
      reflection = reflection && mapped[i] == ((axis - i) % m + m) % m;
    }
    if (!reflection) {
      throw Error("classify_cycle_action: automorphism is not a dihedral action "
                  "on the Hamilton cycle (invariant violation)");
    }
    action.type = CycleAction::Action::Type::reflection;
    action.amount = axis;
    for (int i = 0; i < m; ++i) {
      if ((2 * i) % m == axis % m) action.fixed_vertices.push_back(cycle[i]);
    }
    std::sort(action.fixed_vertices.begin(), action.fixed_vertices.end());
    actions.push_back(std::move(action));
  }
  return actions;
}

// Per-vertex axis data over a dihedral action: fix_axis[v] is the index of
// the unique reflection fixing v, or -1 when every reflection moves v.
struct DihedralFeatures {
  std::vector<CycleAction::Action> actions;
  std::vector<int> reflection_indices;
  std::vector<int> fix_axis;  // indexed by ambient vertex id
};

DihedralFeatures dihedral_features(const std::vector<Permutation>& elements,
                                   const std::vector<int>& cycle, int ambient_size) {
  DihedralFeatures features;
  features.actions = classify_on_cycle(elements, cycle);
  features.fix_axis.assign(ambient_size, -1);
  for (std::size_t i = 0; i < features.actions.size(); ++i) {
    const auto& action = features.actions[i];
    if (action.type != CycleAction::Action::Type::reflection) continue;
    features.reflection_indices.push_back(static_cast<int>(i));
    for (int v : action.fixed_vertices) {
      if (features.fix_axis[v] != -1) {
        throw Error("dihedral action fixes a vertex by two distinct reflections "
                    "(invariant violation)");
      }
      features.fix_axis[v] = static_cast<int>(i);
    }
  }
  return features;
}

}  // namespace

CycleAction classify_cycle_action(const Graph& g) {
  int n = g.vertex_count();
  CycleAction out;
  if (n == 2) {
    if (!g.adjacent(0, 1)) throw DomainError("classify_cycle_action: graph is not K2");
    out.cycle_order = {0, 1};
  } else {
    out.cycle_order = hamilton_cycle(g);
  }
  AutGroup aut = automorphism_group(g);
  out.actions = classify_on_cycle(aut.elements, out.cycle_order);
  return out;
}

ExchangeEvidence exchange_decision_2connected(const Graph& g) {
  int n = g.vertex_count();
  CycleAction cycle_action = classify_cycle_action(g);

  std::vector<Permutation> elements;
  for (const auto& action : cycle_action.actions) elements.push_back(action.perm);
  DihedralFeatures features = dihedral_features(elements, cycle_action.cycle_order, n);

  ExchangeEvidence evidence;
  evidence.center_type = "block";
  for (int v = 0; v < n; ++v) evidence.central_block.push_back(v);
  evidence.stab_trivial = true;  // the pointwise stabilizer of V(G) is trivial

  for (int v = 0; v < n && !evidence.moved_by_all; ++v) {
    if (features.fix_axis[v] == -1) evidence.moved_by_all = v;
  }
  for (int u = 0; u < n && !evidence.fixed_pair; ++u) {
    if (features.fix_axis[u] < 0) continue;
    for (int v = u + 1; v < n; ++v) {
      if (features.fix_axis[v] >= 0 && features.fix_axis[v] != features.fix_axis[u]) {
        evidence.fixed_pair = std::make_pair(u, v);
        break;
      }
    }
  }
  evidence.holds = !(evidence.moved_by_all && evidence.fixed_pair);
  if (evidence.holds) {
    evidence.note = !evidence.moved_by_all
                        ? "every vertex is fixed by some reflection"
                        : "no two vertices are fixed by different reflections";
  }
  return evidence;
}

MinimalSetCensus minimal_determining_sets_2connected(const Graph& g) {
  int n = g.vertex_count();
  AutGroup aut = automorphism_group(g);
  if (aut.trivial()) {
    return MinimalSetCensus::from_sets(SetKind::determining, {VertexSet{}}, aut);
  }
  CycleAction cycle_action = classify_cycle_action(g);
  std::vector<Permutation> elements;
  for (const auto& action : cycle_action.actions) elements.push_back(action.perm);
  DihedralFeatures features = dihedral_features(elements, cycle_action.cycle_order, n);

  std::vector<VertexSet> sets;
  for (int v = 0; v < n; ++v) {
    if (features.fix_axis[v] == -1) sets.push_back({v});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (features.fix_axis[u] >= 0 && features.fix_axis[v] >= 0 &&
          features.fix_axis[u] != features.fix_axis[v]) {
        sets.push_back({u, v});
      }
    }
  }
  return MinimalSetCensus::from_sets(SetKind::determining, std::move(sets), aut);
}

// ---------------------------------------------------------------------------
// Block-cutvertex tree

namespace {

struct BlockFinder {
  const Graph& g;
  int timer = 0;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<VertexSet> blocks;
  std::vector<bool> cut;

  explicit BlockFinder(const Graph& graph)
      : g(graph),
        disc(graph.vertex_count(), -1),
        low(graph.vertex_count(), -1),
        cut(graph.vertex_count(), false) {}

  void pop_block(int v, int u) {
    VertexSet block;
    std::pair<int, int> edge;
    do {
      edge = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(edge.first);
      block.push_back(edge.second);
    } while (edge != std::make_pair(v, u));
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    blocks.push_back(std::move(block));
  }

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int u : g.neighbors(v)) {
      if (u == parent) continue;
      if (disc[u] == -1) {
        ++children;
        edge_stack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          if (parent != -1 || children > 1) cut[v] = true;
          pop_block(v, u);
        }
      } else if (disc[u] < disc[v]) {
        edge_stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  }
};

}  // namespace

BlockCutTree block_cut_tree(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw DomainError("block_cut_tree: empty graph");
  if (!is_connected(g)) throw DomainError("block_cut_tree: graph is disconnected");

  BlockCutTree out;
  if (n == 1) {
    out.blocks = {VertexSet{0}};
    out.block_cuts = {{}};
    out.center_is_block = true;
    out.center_block = 0;
    return out;
  }

  BlockFinder finder(g);
  finder.dfs(0, -1);
  std::sort(finder.blocks.begin(), finder.blocks.end());
  out.blocks = std::move(finder.blocks);
  for (int v = 0; v < n; ++v) {
    if (finder.cut[v]) out.cutvertices.push_back(v);
  }

  int b = static_cast<int>(out.blocks.size());
  int c = static_cast<int>(out.cutvertices.size());
  out.block_cuts.resize(b);
  out.cut_blocks.resize(c);
  for (int bi = 0; bi < b; ++bi) {
    for (int ci = 0; ci < c; ++ci) {
      int v = out.cutvertices[ci];
      if (std::binary_search(out.blocks[bi].begin(), out.blocks[bi].end(), v)) {
        out.block_cuts[bi].push_back(v);
        out.cut_blocks[ci].push_back(bi);
      }
    }
  }

  // center of the bipartite tree by leaf stripping; it is always a single
  // node because every leaf is a B-vertex
  int total = b + c;  // nodes: blocks, then cutvertices
  std::vector<std::vector<int>> tree_adj(total);
  for (int bi = 0; bi < b; ++bi) {
    for (int v : out.block_cuts[bi]) {
      int ci = static_cast<int>(std::lower_bound(out.cutvertices.begin(),
                                                 out.cutvertices.end(), v) -
                                out.cutvertices.begin());
      tree_adj[bi].push_back(b + ci);
      tree_adj[b + ci].push_back(bi);
    }
  }
  std::vector<int> degree(total);
  std::deque<int> layer;
  for (int i = 0; i < total; ++i) {
    degree[i] = static_cast<int>(tree_adj[i].size());
    if (degree[i] <= 1) layer.push_back(i);
  }
  int remaining = total;
  while (remaining > 1) {
    std::deque<int> next;
    remaining -= static_cast<int>(layer.size());
    if (remaining <= 0) {
      // two mutually-adjacent leaves only happen for a single K2 block tree
      throw Error("block_cut_tree: bipartite tree center is not unique");
    }
    for (int node : layer) {
      degree[node] = 0;
      for (int u : tree_adj[node]) {
        if (degree[u] > 0 && --degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  int center = layer.front();
  if (center < b) {
    out.center_is_block = true;
    out.center_block = center;
  } else {
    out.center_is_block = false;
    out.center_cutvertex = out.cutvertices[center - b];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Blockbranches and rooted isomorphism

namespace {

bool rooted_isomorphic(const Graph& g, const VertexSet& va, int root_a,
                       const VertexSet& vb, int root_b) {
  if (va.size() != vb.size()) return false;
  Graph a = induced_subgraph(g, va);
  Graph b = induced_subgraph(g, vb);
  if (a.edge_count() != b.edge_count()) return false;
  int m = a.vertex_count();
  auto index_of = [](const VertexSet& set, int v) {
    return static_cast<int>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
  };
  int ra = index_of(va, root_a), rb = index_of(vb, root_b);
  if (a.degree(ra) != b.degree(rb)) return false;
  {
    std::vector<int> da(m), db(m);
    for (int i = 0; i < m; ++i) da[i] = a.degree(i), db[i] = b.degree(i);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
  }

  // map vertices of a in BFS order from the root so each new vertex has a
  // mapped neighbor to prune against
  std::vector<int> order;
  {
    std::vector<bool> seen(m, false);
    std::deque<int> queue{ra};
    seen[ra] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int u : a.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  std::vector<int> map(m, -1);
  std::vector<bool> used(m, false);
  map[ra] = rb;
  used[rb] = true;
  auto search = [&](auto&& self, std::size_t at) -> bool {
    if (at == order.size()) return true;
    int v = order[at];
    for (int target = 0; target < m; ++target) {
      if (used[target] || a.degree(v) != b.degree(target)) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < at; ++prev) {
        int w = order[prev];
        if (a.adjacent(v, w) != b.adjacent(target, map[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = target;
      used[target] = true;
      if (self(self, at + 1)) return true;
      used[target] = false;
      map[v] = -1;
    }
    return false;
  };
  return search(search, 1);
}

}  // namespace

BlockbranchDecomposition blockbranches_at(const Graph& g, const BlockCutTree& bct,
                                          int v) {
  auto cut_it = std::lower_bound(bct.cutvertices.begin(), bct.cutvertices.end(), v);
  if (cut_it == bct.cutvertices.end() || *cut_it != v) {
    throw ParameterError("blockbranches_at: vertex is not a cutvertex");
  }
  int ci = static_cast<int>(cut_it - bct.cutvertices.begin());

  int b = static_cast<int>(bct.blocks.size());
  int c = static_cast<int>(bct.cutvertices.size());
  std::vector<std::vector<int>> tree_adj(b + c);
  for (int bi = 0; bi < b; ++bi) {
    for (int u : bct.block_cuts[bi]) {
      int cj = static_cast<int>(std::lower_bound(bct.cutvertices.begin(),
                                                 bct.cutvertices.end(), u) -
                                bct.cutvertices.begin());
      tree_adj[bi].push_back(b + cj);
      tree_adj[b + cj].push_back(bi);
    }
  }

  BlockbranchDecomposition out;
  std::vector<bool> seen(b + c, false);
  seen[b + ci] = true;
  for (int start : tree_adj[b + ci]) {
    if (seen[start]) continue;
    // one component of the tree minus the C-vertex
    std::deque<int> queue{start};
    seen[start] = true;
    VertexSet vertices;
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop_front();
      if (node < b) {
        vertices.insert(vertices.end(), bct.blocks[node].begin(),
                        bct.blocks[node].end());
      }
      for (int u : tree_adj[node]) {
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    out.branches.push_back(Blockbranch{v, std::move(vertices), false});
  }
  std::sort(out.branches.begin(), out.branches.end(),
            [](const Blockbranch& x, const Blockbranch& y) {
              return x.vertices < y.vertices;
            });

  for (std::size_t i = 0; i < out.branches.size(); ++i) {
    bool placed = false;
    for (auto& iso_class : out.iso_classes) {
      const Blockbranch& representative = out.branches[iso_class.front()];
      if (rooted_isomorphic(g, representative.vertices, v,
                            out.branches[i].vertices, v)) {
        iso_class.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (!placed) out.iso_classes.push_back({static_cast<int>(i)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Block quotients and the outerplanar determining/exchange criteria

AutGroup block_quotient(const AutGroup& aut, const VertexSet& block) {
  return quotient_action(invariant_subgroup(aut, block), block);
}

AutGroup block_quotient(const Graph& g, const VertexSet& block) {
  return block_quotient(automorphism_group(g), block);
}

bool is_block_determining(const AutGroup& aut, const VertexSet& block,
                          const VertexSet& u) {
  VertexSet sorted_block = block;
  std::sort(sorted_block.begin(), sorted_block.end());
  VertexSet positions;
  for (int v : u) {
    auto it = std::lower_bound(sorted_block.begin(), sorted_block.end(), v);
    if (it == sorted_block.end() || *it != v) {
      throw ParameterError("is_block_determining: u is not a subset of the block");
    }
    positions.push_back(static_cast<int>(it - sorted_block.begin()));
  }
  return is_determining(block_quotient(aut, sorted_block), positions);
}

bool is_block_determining(const Graph& g, const VertexSet& block, const VertexSet& u) {
  return is_block_determining(automorphism_group(g), block, u);
}

namespace {

// For every vertex, the node of the block-cutvertex tree it maps to: its
// C-node if it is a cutvertex, otherwise its unique block's node.
std::vector<int> vertex_nodes(const Graph& g, const BlockCutTree& bct) {
  int b = static_cast<int>(bct.blocks.size());
  std::vector<int> node(g.vertex_count(), -1);
  for (int bi = 0; bi < b; ++bi) {
    for (int v : bct.blocks[bi]) {
      if (node[v] == -1) node[v] = bi;
    }
  }
  for (std::size_t ci = 0; ci < bct.cutvertices.size(); ++ci) {
    node[bct.cutvertices[ci]] = b + static_cast<int>(ci);
  }
  return node;
}

std::vector<std::vector<int>> bc_tree_adjacency(const BlockCutTree& bct) {
  int b = static_cast<int>(bct.blocks.size());
  int c = static_cast<int>(bct.cutvertices.size());
  std::vector<std::vector<int>> tree_adj(b + c);
  for (int bi = 0; bi < b; ++bi) {
    for (int v : bct.block_cuts[bi]) {
      int ci = static_cast<int>(std::lower_bound(bct.cutvertices.begin(),
                                                 bct.cutvertices.end(), v) -
                                bct.cutvertices.begin());
      tree_adj[bi].push_back(b + ci);
      tree_adj[b + ci].push_back(bi);
    }
  }
  return tree_adj;
}

// X for Condition 1: the attachment of every S-vertex onto block bi.  An
// S-vertex inside the block is its own (trivial-blockbranch) attachment;
// anything else projects to the cutvertex of B on the tree path toward it.
VertexSet project_onto_block(const BlockCutTree& bct,
                             const std::vector<std::vector<int>>& tree_adj,
                             const std::vector<int>& vertex_node, int bi,
                             const VertexSet& s) {
  int b = static_cast<int>(bct.blocks.size());
  int total = static_cast<int>(tree_adj.size());
  // entry[x]: the cutvertex of block bi through which node x is reached
  std::vector<int> entry(total, -1);
  std::deque<int> queue{bi};
  std::vector<bool> seen(total, false);
  seen[bi] = true;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (int u : tree_adj[node]) {
      if (seen[u]) continue;
      seen[u] = true;
      if (node == bi) {
        entry[u] = bct.cutvertices[u - b];  // neighbors of a B-node are C-nodes
      } else {
        entry[u] = entry[node];
      }
      queue.push_back(u);
    }
  }
  VertexSet x;
  const VertexSet& block = bct.blocks[bi];
  for (int v : s) {
    if (std::binary_search(block.begin(), block.end(), v)) {
      x.push_back(v);
    } else {
      x.push_back(entry[vertex_node[v]]);
    }
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

}  // namespace

bool is_determining_outerplanar(const Graph& g, const VertexSet& s) {
  require_outerplanar(g, "is_determining_outerplanar");
  return is_determining_outerplanar(g, automorphism_group(g), block_cut_tree(g), s);
}

bool is_determining_outerplanar(const Graph& g, const AutGroup& aut,
                                const BlockCutTree& bct, const VertexSet& s) {
  VertexSet sorted = make_vertex_set(s, g.vertex_count());

  // Condition 2: at every cutvertex, all but one blockbranch per isomorphism
  // class must hold an S-vertex besides the cutvertex itself
  for (int v : bct.cutvertices) {
    BlockbranchDecomposition decomposition = blockbranches_at(g, bct, v);
    for (const auto& iso_class : decomposition.iso_classes) {
      int lacking = 0;
      for (int index : iso_class) {
        const VertexSet& vertices = decomposition.branches[index].vertices;
        bool occupied = false;
        for (int u : sorted) {
          if (u != v && std::binary_search(vertices.begin(), vertices.end(), u)) {
            occupied = true;
            break;
          }
        }
        if (!occupied) ++lacking;
      }
      if (lacking > 1) return false;
    }
  }

  // Condition 1: every block must see a block determining set of attachments
  std::vector<int> vertex_node = vertex_nodes(g, bct);
  std::vector<std::vector<int>> tree_adj = bc_tree_adjacency(bct);
  for (int bi = 0; bi < static_cast<int>(bct.blocks.size()); ++bi) {
    VertexSet x = project_onto_block(bct, tree_adj, vertex_node, bi, sorted);
    if (!is_block_determining(aut, bct.blocks[bi], x)) return false;
  }
  return true;
}

ExchangeEvidence exchange_decision_outerplanar(const Graph& g) {
  require_outerplanar(g, "exchange_decision_outerplanar");
  BlockCutTree bct = block_cut_tree(g);

  ExchangeEvidence evidence;
  if (!bct.center_is_block) {
    evidence.holds = true;
    evidence.center_type = "cutvertex";
    evidence.note = "the block-cutvertex tree centers on cutvertex " +
                    std::to_string(bct.center_cutvertex);
    return evidence;
  }

  const VertexSet& block = bct.blocks[bct.center_block];
  evidence.center_type = "block";
  evidence.central_block = block;

  AutGroup aut = automorphism_group(g);
  evidence.stab_trivial = pointwise_stabilizer(aut, block).trivial();

  AutGroup quotient = block_quotient(aut, block);
  int m = static_cast<int>(block.size());
  std::vector<int> cycle;
  if (m >= 3) {
    std::vector<int> local_cycle = hamilton_cycle(induced_subgraph(g, block));
    cycle = local_cycle;
  } else {
    for (int i = 0; i < m; ++i) cycle.push_back(i);
  }
  DihedralFeatures features = dihedral_features(quotient.elements, cycle, m);

  for (int i = 0; i < m && !evidence.moved_by_all; ++i) {
    if (features.fix_axis[i] == -1) evidence.moved_by_all = block[i];
  }
  for (int i = 0; i < m && !evidence.fixed_pair; ++i) {
    if (features.fix_axis[i] < 0) continue;
    for (int j = i + 1; j < m; ++j) {
      if (features.fix_axis[j] >= 0 && features.fix_axis[j] != features.fix_axis[i]) {
        evidence.fixed_pair = std::make_pair(block[i], block[j]);
        break;
      }
    }
  }
  evidence.holds =
      !(*evidence.stab_trivial && evidence.moved_by_all && evidence.fixed_pair);
  if (evidence.holds) {
    if (!*evidence.stab_trivial) {
      evidence.note = "the central block has a nontrivial pointwise stabilizer";
    } else if (!evidence.moved_by_all) {
      evidence.note = "every central-block vertex is fixed by some reflection";
    } else {
      evidence.note = "no two central-block vertices are fixed by different reflections";
    }
  }
  return evidence;
}

}  // namespace exlab
