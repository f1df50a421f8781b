#include "eso/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "eso/error.hpp"

namespace eso {

std::string to_string(GraphMode mode) {
  switch (mode) {
    case GraphMode::Basic: return "basic";
    case GraphMode::Undirected: return "undirected";
    case GraphMode::Directed: return "directed";
  }
  return "basic";
}

GraphMode parse_graph_mode(std::string_view text) {
  if (text == "basic") return GraphMode::Basic;
  if (text == "undirected") return GraphMode::Undirected;
  if (text == "directed") return GraphMode::Directed;
  throw ValidationError("unknown graph mode '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, GraphMode mode) : n_(n), mode_(mode) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(n, std::vector<std::uint64_t>(words_, 0));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v && mode_ == GraphMode::Basic) {
    throw ValidationError("self-loop at vertex " + std::to_string(u) + " in a basic graph");
  }
  rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
  if (symmetric()) rows_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u][v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  if (symmetric()) rows_[v][u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::add_vertex() {
  ++n_;
  std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
  if (words != words_) {
    words_ = words;
    for (auto& r : rows_) r.resize(words_, 0);
  }
  rows_.emplace_back(words_, 0);
  if (has_marks_) marks_.push_back(0);
  return n_ - 1;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = rows_[u][w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

int Graph::degree(int u) const {
  check_vertex(u);
  int d = 0;
  for (auto word : rows_[u]) d += std::popcount(word);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (!symmetric() || u <= v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  std::size_t loops = 0;
  for (int u = 0; u < n_; ++u) {
    total += degree(u);
    if (has_edge(u, u)) ++loops;
  }
  return symmetric() ? (total - loops) / 2 + loops : total;
}

std::uint64_t Graph::row_mask(int u) const {
  if (n_ > 64) throw PreconditionError("row_mask needs n <= 64");
  return words_ ? rows_[u][0] : 0;
}

void Graph::set_marks(const std::vector<int>& marked_vertices) {
  marks_.assign(n_, 0);
  for (int v : marked_vertices) {
    check_vertex(v);
    marks_[v] = 1;
  }
  has_marks_ = true;
}

void Graph::clear_marks() {
  marks_.clear();
  has_marks_ = false;
}

std::vector<int> Graph::mark_list() const {
  std::vector<int> out;
  for (int v = 0; v < n_ && has_marks_; ++v) {
    if (marks_[v]) out.push_back(v);
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && mode_ == other.mode_ && rows_ == other.rows_ &&
         has_marks_ == other.has_marks_ && marks_ == other.marks_;
}

// ---------------------------------------------------------------------------
// Constructors

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges, GraphMode mode) {
  Graph g(n, mode);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.mode() != b.mode()) throw PreconditionError("disjoint_union needs equal modes");
  Graph g(a.n() + b.n(), a.mode());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  if (a.has_marks() || b.has_marks()) {
    std::vector<int> marks = a.mark_list();
    for (int v : b.mark_list()) marks.push_back(a.n() + v);
    g.set_marks(marks);
  }
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  int k = static_cast<int>(vertices.size());
  Graph h(k, g.mode());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (g.has_edge(vertices[i], vertices[j])) {
        if (g.symmetric() && j < i) continue;
        h.add_edge(i, j);
      }
    }
  }
  if (g.has_marks()) {
    std::vector<int> marks;
    for (int i = 0; i < k; ++i) {
      if (g.marked(vertices[i])) marks.push_back(i);
    }
    h.set_marks(marks);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

void require_basic(const Graph& g, const char* op) {
  if (g.mode() != GraphMode::Basic) {
    throw PreconditionError(std::string(op) + " needs a basic graph");
  }
}

void require_symmetric(const Graph& g, const char* op) {
  if (!g.symmetric()) throw PreconditionError(std::string(op) + " needs an undirected graph");
}

bool valid_bipartition(const Graph& g, const Bipartition& b) {
  if (b.first.size() + b.second.size() != static_cast<std::size_t>(g.n())) return false;
  return is_independent(g, b.first) && is_independent(g, b.second);
}

}  // namespace

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph complement(const Graph& g) {
  require_basic(g, "complement");
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) h.add_edge(u, v);
    }
  }
  if (g.has_marks()) h.set_marks(g.mark_list());
  return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
  require_symmetric(g, "components");
  std::vector<int> seen(g.n(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  require_symmetric(g, "is_bipartite");
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < g.n(); ++v) (side[v] == 0 ? b.first : b.second).push_back(v);
  if (!valid_bipartition(g, b)) throw std::logic_error("is_bipartite produced an invalid witness");
  return b;
}

std::optional<int> is_star(const Graph& g) {
  require_basic(g, "is_star");
  if (g.n() < 2) throw PreconditionError("is_star needs at least 2 vertices");
  if (g.edge_count() != static_cast<std::size_t>(g.n() - 1)) return std::nullopt;
  for (int c = 0; c < g.n(); ++c) {
    if (g.degree(c) == g.n() - 1) return c;
  }
  return std::nullopt;
}

std::optional<int> common_endpoint(const Graph& g) {
  require_basic(g, "common_endpoint");
  std::size_t m = g.edge_count();
  if (m == 0) return std::nullopt;
  for (int c = 0; c < g.n(); ++c) {
    if (static_cast<std::size_t>(g.degree(c)) == m) return c;
  }
  return std::nullopt;
}

bool is_valid_split(const Graph& g, const SplitPartition& p) {
  if (p.clique.size() + p.independent.size() != static_cast<std::size_t>(g.n())) return false;
  std::vector<int> seen(g.n(), 0);
  for (int v : p.clique) seen[v]++;
  for (int v : p.independent) seen[v]++;
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
  return is_clique(g, p.clique) && is_independent(g, p.independent);
}

bool has_forbidden_split_subgraph(const Graph& g) {
  require_basic(g, "is_split");
  const int n = g.n();
  auto degree_in = [&](int v, const int* set, int k) {
    int d = 0;
    for (int i = 0; i < k; ++i) d += g.has_edge(v, set[i]);
    return d;
  };
  int s[5];
  for (s[0] = 0; s[0] < n; ++s[0]) {
    for (s[1] = s[0] + 1; s[1] < n; ++s[1]) {
      for (s[2] = s[1] + 1; s[2] < n; ++s[2]) {
        for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
          int deg[4];
          int sum = 0;
          for (int i = 0; i < 4; ++i) sum += deg[i] = degree_in(s[i], s, 4);
          bool all1 = std::all_of(deg, deg + 4, [](int d) { return d == 1; });
          bool all2 = std::all_of(deg, deg + 4, [](int d) { return d == 2; });
          if ((sum == 4 && all1) || (sum == 8 && all2)) return true;  // 2K2 or C4
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            bool regular2 = true;
            for (int i = 0; i < 5 && regular2; ++i) regular2 = degree_in(s[i], s, 5) == 2;
            if (regular2) return true;  // C5
          }
        }
      }
    }
  }
  return false;
}

std::optional<SplitPartition> is_split(const Graph& g) {
  require_basic(g, "is_split");
  if (has_forbidden_split_subgraph(g)) return std::nullopt;
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 1; i <= g.n(); ++i) {
    if (g.degree(order[i - 1]) >= i - 1) m = i;
  }
  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + m);
  p.independent.assign(order.begin() + m, order.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  if (!is_valid_split(g, p)) {
    throw std::logic_error("graph has no forbidden subgraph but the degree sweep failed");
  }
  return p;
}

std::optional<Bipartition> is_complete_bipartite(const Graph& g) {
  require_basic(g, "is_complete_bipartite");
  if (g.edge_count() == 0) throw PreconditionError("is_complete_bipartite needs an edge");
  auto b = is_bipartite(g);
  if (!b || b->first.empty() || b->second.empty()) return std::nullopt;
  for (int u : b->first) {
    for (int v : b->second) {
      if (!g.has_edge(u, v)) return std::nullopt;
    }
  }
  return b;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int m, std::uint64_t budget)
      : g_(g), m_(m), budget_(budget), on_path_(g.n(), 0) {}

  // Simple cycle through `start` using only vertices greater than `start`.
  bool from(int start) {
    start_ = start;
    on_path_[start] = 1;
    bool found = extend(start, 1);
    on_path_[start] = 0;
    return found;
  }

 private:
  bool extend(int u, int length) {
    if (++steps_ > budget_) {
      throw BudgetExceeded("cycle enumeration exceeded " + std::to_string(budget_) + " steps");
    }
    for (int v : g_.neighbors(u)) {
      if (v == start_) {
        if (length >= 3 && length % m_ == 0) return true;
        continue;
      }
      if (v < start_ || on_path_[v]) continue;
      on_path_[v] = 1;
      bool found = extend(v, length + 1);
      on_path_[v] = 0;
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  int m_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  int start_ = 0;
  std::vector<char> on_path_;
};

}  // namespace

bool has_cycle_mod(const Graph& g, int m, bool per_component, std::uint64_t budget) {
  require_basic(g, "has_cycle_mod");
  if (m < 1) throw PreconditionError("has_cycle_mod needs m >= 1");
  CycleSearch search(g, m, budget);
  if (!per_component) {
    for (int s = 0; s < g.n(); ++s) {
      if (search.from(s)) return true;
    }
    return false;
  }
  for (const auto& comp : components(g)) {
    bool found = false;
    for (int s : comp) {
      if ((found = search.from(s))) break;
    }
    if (!found) return false;
  }
  return true;
}

Graph subdivide(const Graph& g) {
  require_basic(g, "subdivide");
  auto edges = g.edges();
  Graph h(g.n() + static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int w = g.n() + static_cast<int>(i);
    h.add_edge(edges[i].first, w);
    h.add_edge(w, edges[i].second);
  }
  return h;
}

std::vector<std::vector<int>> vertex_equivalence_classes(const Graph& g) {
  require_basic(g, "vertex_equivalence_classes");
  auto equivalent = [&](int u, int v) {
    for (int x = 0; x < g.n(); ++x) {
      if (x != u && x != v && g.has_edge(u, x) != g.has_edge(v, x)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < g.n(); ++v) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const std::vector<int>& c) { return equivalent(c.front(), v); });
    if (it == classes.end()) {
      classes.push_back({v});
    } else {
      it->push_back(v);
    }
  }
  for (const auto& c : classes) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!equivalent(c[i], c[j])) throw std::logic_error("vertex equivalence is not transitive");
      }
    }
    if (!is_clique(g, c) && !is_independent(g, c)) {
      throw std::logic_error("equivalence class is neither a clique nor independent");
    }
  }
  return classes;
}

}  // namespace eso
