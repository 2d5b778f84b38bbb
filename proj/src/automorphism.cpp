#include "exlab/automorphism.hpp"

#include <algorithm>
#include <unordered_set>

namespace exlab {

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation inverse_permutation(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = static_cast<int>(i);
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Greedy generating set: walk the element list and keep anything not yet in
// the closure of what was kept so far.
std::vector<Permutation> extract_generators(const std::vector<Permutation>& elements,
                                            int degree) {
  std::vector<Permutation> generators;
  std::unordered_set<Permutation, PermHash> closure;
  closure.insert(identity_permutation(degree));
  for (const Permutation& candidate : elements) {
    if (closure.contains(candidate)) continue;
    generators.push_back(candidate);
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation& known : frontier) {
        for (const Permutation& gen : generators) {
          Permutation product = compose(gen, known);
          if (closure.insert(product).second) next.push_back(std::move(product));
        }
      }
      frontier = std::move(next);
    }
  }
  return generators;
}

AutGroup finalize_group(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  AutGroup group;
  group.degree = degree;
  group.generators = extract_generators(elements, degree);
  group.elements = std::move(elements);
  return group;
}

// Vertex invariant: start from (degree, sorted distance row), then refine
// once with the colors of each vertex's distance profile.
std::vector<int> refined_colors(const Graph& g, const DistanceMatrix& dist) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> signature(n);
  for (int v = 0; v < n; ++v) {
    signature[v].push_back(g.degree(v));
    std::vector<int> row = dist[v];
    std::sort(row.begin(), row.end());
    signature[v].insert(signature[v].end(), row.begin(), row.end());
  }
  auto rank = [n](const std::vector<std::vector<int>>& sig) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> colors(n, 0);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      colors[order[i]] = c;
    }
    return colors;
  };
  std::vector<int> colors = rank(signature);
  for (int v = 0; v < n; ++v) {
    std::vector<int> profile;
    profile.reserve(2 * n + 1);
    profile.push_back(colors[v]);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int u = 0; u < n; ++u) pairs.emplace_back(dist[v][u], colors[u]);
    std::sort(pairs.begin(), pairs.end());
    for (auto [d, c] : pairs) {
      profile.push_back(d);
      profile.push_back(c);
    }
    signature[v] = std::move(profile);
  }
  return rank(signature);
}

}  // namespace

AutGroup automorphism_group(const Graph& g, const AutGroupCaps& caps) {
  int n = g.vertex_count();
  if (n > caps.vertex_cap) {
    throw BudgetError("automorphism search capped at " +
                      std::to_string(caps.vertex_cap) + " vertices");
  }
  if (n == 0) return finalize_group(0, {Permutation{}});

  DistanceMatrix dist = all_pairs_distances(g);
  std::vector<int> colors = refined_colors(g, dist);

  std::vector<Permutation> elements;
  Permutation image(n, -1);
  std::vector<bool> used(n, false);

  auto search = [&](auto&& self, int v) -> void {
    if (v == n) {
      elements.push_back(image);
      if (static_cast<long long>(elements.size()) > caps.element_cap) {
        throw BudgetError("automorphism group exceeds element cap");
      }
      return;
    }
    for (int target = 0; target < n; ++target) {
      if (used[target] || colors[target] != colors[v]) continue;
      bool ok = true;
      for (int prev = 0; prev < v; ++prev) {
        // distance preservation subsumes the adjacency check (d == 1)
        if (dist[v][prev] != dist[target][image[prev]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = target;
      used[target] = true;
      self(self, v + 1);
      used[target] = false;
      image[v] = -1;
    }
  };
  search(search, 0);
  return finalize_group(n, std::move(elements));
}

AutGroup pointwise_stabilizer(const AutGroup& group, const VertexSet& s) {
  for (int v : s) {
    if (v < 0 || v >= group.degree) throw ParameterError("stabilizer vertex out of range");
  }
  std::vector<Permutation> kept;
  for (const Permutation& perm : group.elements) {
    bool fixes = true;
    for (int v : s) {
      if (perm[v] != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) kept.push_back(perm);
  }
  return finalize_group(group.degree, std::move(kept));
}

AutGroup invariant_subgroup(const AutGroup& group, const VertexSet& vs) {
  std::vector<bool> member(group.degree, false);
  for (int v : vs) {
    if (v < 0 || v >= group.degree) throw ParameterError("invariant-set vertex out of range");
    member[v] = true;
  }
  std::vector<Permutation> kept;
  for (const Permutation& perm : group.elements) {
    bool invariant = true;
    for (int v : vs) {
      if (!member[perm[v]]) {
        invariant = false;
        break;
      }
    }
    if (invariant) kept.push_back(perm);
  }
  return finalize_group(group.degree, std::move(kept));
}

AutGroup quotient_action(const AutGroup& group, const VertexSet& vs) {
  VertexSet sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> position(group.degree, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= group.degree) throw ParameterError("quotient vertex out of range");
    position[v] = static_cast<int>(i);
  }
  std::vector<Permutation> restrictions;
  for (const Permutation& perm : group.elements) {
    Permutation restricted(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      int target = perm[sorted[i]];
      if (target >= group.degree || position[target] < 0) {
        throw ParameterError("quotient_action: set is not invariant under the group");
      }
      restricted[i] = position[target];
    }
    restrictions.push_back(std::move(restricted));
  }
  std::sort(restrictions.begin(), restrictions.end());
  restrictions.erase(std::unique(restrictions.begin(), restrictions.end()),
                     restrictions.end());
  return finalize_group(static_cast<int>(sorted.size()), std::move(restrictions));
}

}  // namespace exlab
