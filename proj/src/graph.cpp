#include "exlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "json.hpp"

namespace exlab {

VertexSet make_vertex_set(std::vector<int> ids, int n) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids) {
    if (v < 0 || v >= n) {
      throw ParameterError("vertex " + std::to_string(v) +
                           " out of range for n=" + std::to_string(n));
    }
  }
  return ids;
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("self-loops are not allowed");
  bits_[std::size_t(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
  bits_[std::size_t(v) * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[std::size_t(u) * words_ + v / 64] &= ~(std::uint64_t(1) << (v % 64));
  bits_[std::size_t(v) * words_ + u / 64] &= ~(std::uint64_t(1) << (u % 64));
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) {
    d += std::popcount(bits_[std::size_t(v) * words_ + w]);
  }
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = bits_[std::size_t(v) * words_ + w];
    while (bits != 0) {
      int bit = std::countr_zero(bits);
      out.push_back(w * 64 + bit);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families

Family parse_family(std::string_view name) {
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "wheel") return Family::wheel;
  if (name == "hypercube") return Family::hypercube;
  if (name == "kneser") return Family::kneser;
  if (name == "randomTree") return Family::random_tree;
  if (name == "randomOuterplanar") return Family::random_outerplanar;
  throw ParameterError("unknown graph family: " + std::string(name));
}

std::string family_name(Family family) {
  switch (family) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::hypercube: return "hypercube";
    case Family::kneser: return "kneser";
    case Family::random_tree: return "randomTree";
    case Family::random_outerplanar: return "randomOuterplanar";
  }
  throw ParameterError("unknown graph family");
}

SeededRng::SeededRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededRng::next() { return engine_(); }

int SeededRng::below(int bound) {
  if (bound <= 1) return 0;
  return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
}

namespace {

long long param_at(const FamilySpec& spec, std::size_t index, const char* what) {
  if (spec.params.size() <= index) {
    throw ParameterError(std::string("missing parameter: ") + what);
  }
  return spec.params[index];
}

Graph make_cycle(int n) {
  if (n < 3) throw ParameterError("cycle requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw ParameterError("path requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_complete(int n) {
  if (n < 1) throw ParameterError("complete requires n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_star(int leaves) {
  if (leaves < 1) throw ParameterError("star requires >= 1 leaf");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph make_wheel(int n) {
  if (n < 3) throw ParameterError("wheel requires n >= 3");
  Graph g(n + 1);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n);
  }
  return g;
}

Graph make_hypercube(int dim) {
  if (dim < 0 || dim > 20) throw ParameterError("hypercube dimension out of range");
  int n = 1 << dim;
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < dim; ++bit) {
      int u = v ^ (1 << bit);
      if (u > v) g.add_edge(v, u);
    }
  }
  return g;
}

Graph make_kneser(int n, int k) {
  if (k < 1 || 2 * k >= n) throw ParameterError("kneser requires 1 <= k < n/2");
  auto subsets = kneser_vertex_subsets(n, k);
  Graph g(static_cast<int>(subsets.size()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      bool disjoint = true;
      for (int a : subsets[i]) {
        if (std::binary_search(subsets[j].begin(), subsets[j].end(), a)) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

Graph make_random_tree(int n, SeededRng& rng) {
  if (n < 1) throw ParameterError("randomTree requires n >= 1");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  // Random Pruefer sequence, standard decode.
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = rng.below(n);
  std::vector<int> remaining_degree(n, 1);
  for (int x : pruefer) remaining_degree[x]++;
  std::vector<bool> used(n, false);
  for (int x : pruefer) {
    int leaf = -1;
    for (int v = 0; v < n; ++v) {
      if (remaining_degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    }
    g.add_edge(leaf, x);
    used[leaf] = true;
    remaining_degree[x]--;
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (!used[v] && remaining_degree[v] == 1) (a < 0 ? a : b) = v;
  }
  g.add_edge(a, b);
  return g;
}

// Cycle with a seeded non-crossing chord set, extra vertices attached as
// pendant trees, and a final random relabeling.
Graph make_random_outerplanar(int n, SeededRng& rng) {
  if (n < 3) throw ParameterError("randomOuterplanar requires n >= 3");
  int cycle_size = 3 + rng.below(n - 2);  // in [3, n]
  Graph g(n);
  for (int i = 0; i < cycle_size; ++i) g.add_edge(i, (i + 1) % cycle_size);

  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < cycle_size; ++i) {
    for (int j = i + 2; j < cycle_size; ++j) {
      if (i == 0 && j == cycle_size - 1) continue;  // cycle edge
      candidates.emplace_back(i, j);
    }
  }
  rng.shuffle(candidates);
  std::vector<std::pair<int, int>> chords;
  for (auto [a, b] : candidates) {
    if (rng.below(3) != 0) continue;
    bool crosses = false;
    for (auto [c, d] : chords) {
      // chords {a,b}, {c,d} on the cycle cross iff exactly one of c,d lies
      // strictly between a and b
      bool c_inside = a < c && c < b;
      bool d_inside = a < d && d < b;
      if (c_inside != d_inside && c != a && c != b && d != a && d != b) {
        crosses = true;
        break;
      }
    }
    if (!crosses) {
      chords.emplace_back(a, b);
      g.add_edge(a, b);
    }
  }

  for (int v = cycle_size; v < n; ++v) g.add_edge(v, rng.below(v));

  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(relabel);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(relabel[u], relabel[v]);
  return out;
}

}  // namespace

std::vector<std::vector<int>> kneser_vertex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // lexicographic k-subsets of {1..n}
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

int kneser_vertex_index(int n, int k, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  auto subsets = kneser_vertex_subsets(n, k);
  auto it = std::find(subsets.begin(), subsets.end(), subset);
  if (it == subsets.end()) throw ParameterError("not a valid kneser vertex subset");
  return static_cast<int>(it - subsets.begin());
}

std::vector<Graph> seeded_corpus(Family family, int count, int n_min, int n_max,
                                 std::uint64_t base_seed) {
  if (count < 0 || n_min < 1 || n_max < n_min) {
    throw ParameterError("seeded_corpus: invalid count or size range");
  }
  std::vector<Graph> out;
  out.reserve(count);
  int span = n_max - n_min + 1;
  for (int i = 0; i < count; ++i) {
    FamilySpec spec;
    spec.family = family;
    spec.params = {n_min + (i % span)};
    spec.seed = base_seed + static_cast<std::uint64_t>(i);
    out.push_back(generate(spec));
  }
  return out;
}

Graph generate(const FamilySpec& spec) {
  auto int_param = [&](std::size_t i, const char* what) {
    long long v = param_at(spec, i, what);
    if (v < -(1LL << 30) || v > (1LL << 30)) throw ParameterError("parameter out of range");
    return static_cast<int>(v);
  };
  switch (spec.family) {
    case Family::cycle: return make_cycle(int_param(0, "n"));
    case Family::path: return make_path(int_param(0, "n"));
    case Family::complete: return make_complete(int_param(0, "n"));
    case Family::star: return make_star(int_param(0, "leaves"));
    case Family::wheel: return make_wheel(int_param(0, "n"));
    case Family::hypercube: return make_hypercube(int_param(0, "dimension"));
    case Family::kneser: return make_kneser(int_param(0, "n"), int_param(1, "k"));
    case Family::random_tree: {
      if (!spec.seed) throw ParameterError("randomTree requires a seed");
      SeededRng rng(*spec.seed);
      return make_random_tree(int_param(0, "n"), rng);
    }
    case Family::random_outerplanar: {
      if (!spec.seed) throw ParameterError("randomOuterplanar requires a seed");
      SeededRng rng(*spec.seed);
      return make_random_outerplanar(int_param(0, "n"), rng);
    }
  }
  throw ParameterError("unknown graph family");
}

// ---------------------------------------------------------------------------
// graph6, short form only: header byte n+63, then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, each
// byte offset by 63.

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw BudgetError("graph6 short form supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit_pos = 0;
  unsigned char current = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      current = static_cast<unsigned char>(current << 1);
      if (g.adjacent(row, col)) current |= 1;
      if (++bit_pos == 6) {
        out.push_back(static_cast<char>(current + 63));
        bit_pos = 0;
        current = 0;
      }
    }
  }
  if (bit_pos != 0) {
    current = static_cast<unsigned char>(current << (6 - bit_pos));
    out.push_back(static_cast<char>(current + 63));
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("empty graph6 input");
  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw FormatError("graph6 long form (n > 62) is not supported");
  if (header < 63 || header > 125) throw FormatError("invalid graph6 header byte");
  int n = header - 63;
  long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
  long long body_len = (bits_needed + 5) / 6;
  if (static_cast<long long>(text.size()) - 1 != body_len) {
    throw FormatError("graph6 body length mismatch");
  }
  Graph g(n);
  long long bit_index = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit_index) {
      unsigned char byte = static_cast<unsigned char>(text[1 + bit_index / 6]);
      if (byte < 63 || byte > 126) throw FormatError("invalid graph6 body byte");
      int shift = 5 - static_cast<int>(bit_index % 6);
      if (((byte - 63) >> shift) & 1) g.add_edge(row, col);
    }
  }
  return g;
}

Graph parse_edge_list_json(std::string_view text) {
  nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("n") ||
      !parsed.contains("edges") || !parsed["n"].is_number_integer() ||
      !parsed["edges"].is_array()) {
    throw FormatError("edge-list JSON must look like {\"n\": int, \"edges\": [[u,v],...]}");
  }
  int n = parsed["n"].get<int>();
  if (n < 0) throw FormatError("edge-list JSON: negative vertex count");
  Graph g(n);
  for (const auto& e : parsed["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw FormatError("edge-list JSON: each edge must be [u, v]");
    }
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
      throw FormatError("edge-list JSON: invalid edge endpoint");
    }
    g.add_edge(u, v);
  }
  return g;
}

// ---------------------------------------------------------------------------

DistanceMatrix all_pairs_distances(const Graph& g) {
  int n = g.vertex_count();
  DistanceMatrix dist(n, std::vector<int>(n, kUnreachable));
  std::vector<std::vector<int>> adjacency(n);
  for (int v = 0; v < n; ++v) adjacency[v] = g.neighbors(v);
  std::deque<int> queue;
  for (int source = 0; source < n; ++source) {
    auto& row = dist[source];
    row[source] = 0;
    queue.clear();
    queue.push_back(source);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : adjacency[v]) {
        if (row[u] == kUnreachable) {
          row[u] = row[v] + 1;
          queue.push_back(u);
        }
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        queue.push_back(u);
      }
    }
  }
  return count == n;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw ParameterError("delete_edge: {u,v} is not an edge");
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

Graph subdivide_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw ParameterError("subdivide_edge: {u,v} is not an edge");
  int n = g.vertex_count();
  Graph out(n + 1);
  for (auto [a, b] : g.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    out.add_edge(a, b);
  }
  out.add_edge(u, n);
  out.add_edge(v, n);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  VertexSet sorted = make_vertex_set(vertices, g.vertex_count());
  int m = static_cast<int>(sorted.size());
  Graph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(sorted[i], sorted[j])) out.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace exlab
