#ifndef EXLAB_GRAPH_HPP
#define EXLAB_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exlab/errors.hpp"

namespace exlab {

// A sorted, duplicate-free set of vertex ids.
using VertexSet = std::vector<int>;

// Sorts and deduplicates, validating entries against [0, n).
VertexSet make_vertex_set(std::vector<int> ids, int n);

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Graphs are treated as immutable once built; the mutating members exist
// for generators and the edge-surgery operations, which return fresh values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;  // row-major, n_ rows of words_ words
};

// ---------------------------------------------------------------------------
// Graph families

enum class Family {
  cycle,
  path,
  complete,
  star,
  wheel,
  hypercube,
  kneser,
  random_tree,
  random_outerplanar,
};

struct FamilySpec {
  Family family{};
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
};

// Parses the CLI spelling ("cycle", ..., "randomTree", "randomOuterplanar").
Family parse_family(std::string_view name);
std::string family_name(Family family);

// Builds the named graph.  Conventions:
//   wheel(n):      rim vertices 0..n-1 in cycle order, hub = n
//   star(k):       center 0, leaves 1..k
//   hypercube(d):  vertices are bitmasks 0..2^d-1
//   kneser(n,k):   vertices are the k-subsets of {1..n} in lexicographic
//                  order of their sorted element lists
Graph generate(const FamilySpec& spec);

// The k-subsets of {1..n} in lexicographic order (1-based elements), which
// is the kneser vertex order used by generate.
std::vector<std::vector<int>> kneser_vertex_subsets(int n, int k);
int kneser_vertex_index(int n, int k, std::vector<int> subset);

// Deterministic corpus for the seeded property sweeps: graph i has
// n = n_min + (i mod span) and seed = base_seed + i.
std::vector<Graph> seeded_corpus(Family family, int count, int n_min, int n_max,
                                 std::uint64_t base_seed);

// ---------------------------------------------------------------------------
// graph6 (short form, n <= 62)

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge-list JSON form {"n": int, "edges": [[u,v], ...]}.
Graph parse_edge_list_json(std::string_view text);

// ---------------------------------------------------------------------------
// Distances and edge surgery

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

using DistanceMatrix = std::vector<std::vector<int>>;

// BFS from every vertex; unreachable pairs hold kUnreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

Graph delete_edge(const Graph& g, int u, int v);

// Replaces edge {u,v} by a new degree-two vertex n adjacent to u and v.
Graph subdivide_edge(const Graph& g, int u, int v);

// Induced subgraph on the given vertices, relabeled by sorted position.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

// ---------------------------------------------------------------------------
// Deterministic seeded randomness for the random families and test corpora.
// mt19937_64 has a fully specified sequence, so identical seeds give
// identical graphs on every platform.

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);
  std::uint64_t next();
  int below(int bound);  // uniform-ish in [0, bound)

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
      std::swap(values[i], values[below(i + 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace exlab

#endif
