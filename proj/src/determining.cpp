#include "exlab/determining.hpp"

#include <algorithm>
#include <unordered_map>

#include "set_search.hpp"
#include "stab_oracle.hpp"

namespace exlab {

std::string set_kind_name(SetKind kind) {
  return kind == SetKind::determining ? "determining" : "resolving";
}

SetKind parse_set_kind(std::string_view name) {
  if (name == "det" || name == "determining") return SetKind::determining;
  if (name == "res" || name == "resolving") return SetKind::resolving;
  throw ParameterError("unknown set kind: " + std::string(name));
}

bool is_determining(const AutGroup& group, const VertexSet& s) {
  for (int v : s) {
    if (v < 0 || v >= group.degree) throw ParameterError("set vertex out of range");
  }
  int fixers = 0;  // the identity always fixes s
  for (const Permutation& perm : group.elements) {
    bool fixes = true;
    for (int v : s) {
      if (perm[v] != v) {
        fixes = false;
        break;
      }
    }
    if (fixes && ++fixers > 1) return false;
  }
  return true;
}

bool is_determining(const Graph& g, const VertexSet& s) {
  return is_determining(automorphism_group(g), s);
}

bool is_minimal_determining(const AutGroup& group, const VertexSet& s) {
  if (!is_determining(group, s)) return false;
  VertexSet reduced;
  reduced.reserve(s.size() - 1);
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    reduced.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != skip) reduced.push_back(s[i]);
    }
    if (is_determining(group, reduced)) return false;
  }
  return true;
}

bool is_minimal_determining(const Graph& g, const VertexSet& s) {
  return is_minimal_determining(automorphism_group(g), s);
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

MinimalSetCensus MinimalSetCensus::from_sets(SetKind kind, std::vector<VertexSet> sets,
                                             const AutGroup& group) {
  MinimalSetCensus census;
  census.kind = kind;
  std::sort(sets.begin(), sets.end());
  census.sets = std::move(sets);
  for (const VertexSet& s : census.sets) {
    census.size_histogram[static_cast<int>(s.size())]++;
  }
  census.orbit_count = orbit_count_of_sets(group, census.sets);
  return census;
}

int orbit_count_of_sets(const AutGroup& group, const std::vector<VertexSet>& sets) {
  if (sets.empty()) return 0;
  std::unordered_map<VertexSet, int, VecHash> index_of;
  index_of.reserve(sets.size() * 2);
  for (std::size_t i = 0; i < sets.size(); ++i) index_of[sets[i]] = static_cast<int>(i);
  std::vector<bool> visited(sets.size(), false);
  int orbits = 0;
  std::vector<int> stack;
  for (std::size_t start = 0; start < sets.size(); ++start) {
    if (visited[start]) continue;
    ++orbits;
    visited[start] = true;
    stack.assign(1, static_cast<int>(start));
    while (!stack.empty()) {
      int at = stack.back();
      stack.pop_back();
      for (const Permutation& perm : group.generators) {
        VertexSet image;
        image.reserve(sets[at].size());
        for (int v : sets[at]) image.push_back(perm[v]);
        std::sort(image.begin(), image.end());
        auto it = index_of.find(image);
        if (it != index_of.end() && !visited[it->second]) {
          visited[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

MinimalSetCensus minimal_determining_sets(const Graph& g, int max_size,
                                          SearchBudget& budget) {
  AutGroup group = automorphism_group(g);
  detail::StabilizerOracle oracle(group);
  auto result = detail::enumerate_minimal_full_sets(
      g.vertex_count(), max_size,
      [&oracle](const VertexSet& s) { return oracle.trivial_stabilizer(s); }, budget);
  return MinimalSetCensus::from_sets(SetKind::determining,
                                     std::move(result.minimal_sets), group);
}

MinimalSetCensus minimal_determining_sets(const Graph& g, int max_size) {
  SearchBudget budget;
  return minimal_determining_sets(g, max_size, budget);
}

int determining_number(const Graph& g, SearchBudget& budget) {
  int n = g.vertex_count();
  AutGroup group = automorphism_group(g);
  if (group.trivial()) return 0;
  detail::StabilizerOracle oracle(group);

  // for each target size, extend prefixes with incremental stabilizer lists
  std::vector<int> chosen;
  auto search = [&](auto&& self, int next, int remaining,
                    const std::vector<int>& stab) -> bool {
    if (remaining == 0) return stab.size() <= 1;
    for (int v = next; v <= n - remaining; ++v) {
      budget.charge();
      std::vector<int> filtered = oracle.filter(stab, v);
      chosen.push_back(v);
      if (self(self, v + 1, remaining - 1, filtered)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::vector<int> all(group.elements.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  for (int k = 1; k <= n; ++k) {
    chosen.clear();
    if (search(search, 0, k, all)) return k;
  }
  return n;  // the full vertex set always determines
}

int determining_number(const Graph& g) {
  SearchBudget budget;
  return determining_number(g, budget);
}

}  // namespace exlab
