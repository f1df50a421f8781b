#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eso {

/// basic: symmetric, irreflexive. undirected: symmetric, loops allowed.
/// directed: arbitrary arcs, loops allowed.
enum class GraphMode { Basic, Undirected, Directed };

std::string to_string(GraphMode mode);
GraphMode parse_graph_mode(std::string_view text);

/// Dense adjacency bit matrix with an optional unary mark set S.
class Graph {
 public:
  explicit Graph(int n = 0, GraphMode mode = GraphMode::Basic);

  int n() const { return n_; }
  GraphMode mode() const { return mode_; }
  bool symmetric() const { return mode_ != GraphMode::Directed; }

  /// Adds {u,v} (both directions unless directed). Loops in basic mode throw.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return (rows_[u][v >> 6] >> (v & 63)) & 1U;
  }

  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  std::vector<int> neighbors(int u) const;
  int degree(int u) const;

  /// Each undirected edge once as (u, v) with u <= v; every arc for
  /// directed graphs. Lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  /// Adjacency row of u as a single word. Requires n <= 64.
  std::uint64_t row_mask(int u) const;

  bool has_marks() const { return has_marks_; }
  bool marked(int v) const { return has_marks_ && marks_[v] != 0; }
  void set_marks(const std::vector<int>& marked_vertices);
  void clear_marks();
  std::vector<int> mark_list() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  GraphMode mode_ = GraphMode::Basic;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
  bool has_marks_ = false;
  std::vector<char> marks_;
};

// Small constructors.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                       GraphMode mode = GraphMode::Basic);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Structural predicates. Every optional witness is re-verified before it
// is returned.

Graph complement(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

struct Bipartition {
  std::vector<int> first;   // shore containing vertex 0
  std::vector<int> second;
  bool operator==(const Bipartition&) const = default;
};

std::optional<Bipartition> is_bipartite(const Graph& g);

/// Smallest vertex c adjacent to all others with every edge incident to c.
std::optional<int> is_star(const Graph& g);

/// Smallest vertex lying on every edge. Absent for edgeless graphs.
std::optional<int> common_endpoint(const Graph& g);

struct SplitPartition {
  std::vector<int> clique;
  std::vector<int> independent;
  bool operator==(const SplitPartition&) const = default;
};

/// Forbidden induced 2K2/C4/C5 test; the partition comes from the degree
/// sweep and is checked before being returned.
std::optional<SplitPartition> is_split(const Graph& g);
bool has_forbidden_split_subgraph(const Graph& g);
bool is_valid_split(const Graph& g, const SplitPartition& p);

/// Shores (X, V\X) of a complete bipartite spanning subgraph equal to g.
std::optional<Bipartition> is_complete_bipartite(const Graph& g);

/// Default number of DFS extensions has_cycle_mod may perform.
inline constexpr std::uint64_t kDefaultCycleBudget = std::uint64_t{1} << 28;

/// Simple cycles of length >= 3 whose length is divisible by m. With
/// per_component, every component must contain one; otherwise any will do.
bool has_cycle_mod(const Graph& g, int m, bool per_component,
                   std::uint64_t budget = kDefaultCycleBudget);

/// Replaces each edge {u,v} (lexicographic index i) by u - (n+i) - v.
Graph subdivide(const Graph& g);

/// u ~ v iff they agree on every x outside {u,v}.
std::vector<std::vector<int>> vertex_equivalence_classes(const Graph& g);

bool is_clique(const Graph& g, const std::vector<int>& vertices);
bool is_independent(const Graph& g, const std::vector<int>& vertices);

}  // namespace eso
