#include "eso/pattern.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <stdexcept>

#include "eso/error.hpp"

namespace eso {

PatternGraph::PatternGraph(std::vector<std::string> names)
    : colors(std::move(names)), plus(colors.size(), 0), minus(colors.size(), 0) {
  if (colors.size() > 64) throw PreconditionError("pattern graphs support at most 64 colours");
}

void PatternGraph::add_plus(int c, int d) { plus.at(c) |= std::uint64_t{1} << d; }
void PatternGraph::add_minus(int c, int d) { minus.at(c) |= std::uint64_t{1} << d; }

int PatternGraph::color_index(const std::string& name) const {
  auto it = std::find(colors.begin(), colors.end(), name);
  if (it == colors.end()) throw ValidationError("unknown colour '" + name + "'");
  return static_cast<int>(it - colors.begin());
}

PatternGraph PatternGraph::two_color(unsigned code) {
  PatternGraph p({"black", "white"});
  for (int c = 0; c < 2; ++c) {
    for (int d = 0; d < 2; ++d) {
      if ((code >> (2 * c + d)) & 1U) p.add_plus(c, d);
      if ((code >> (4 + 2 * c + d)) & 1U) p.add_minus(c, d);
    }
  }
  return p;
}

PatternGraph swap_arcs(const PatternGraph& p) {
  PatternGraph q = p;
  std::swap(q.plus, q.minus);
  return q;
}

// ---------------------------------------------------------------------------
// Compilation

PatternGraph compile_pattern(const Formula& f) {
  bool shape = f.fo.size() == 2 && f.fo[0].kind == Quantifier::Forall &&
               f.fo[1].kind == Quantifier::Exists &&
               std::all_of(f.so.begin(), f.so.end(), [](const SoQuantifier& q) { return q.arity == 1; });
  if (!shape) throw PreconditionError("compile_pattern needs a prefix of the form E1...E1 a e");
  if (f.uses_mark()) throw PreconditionError("compile_pattern does not support the mark S");
  if (f.so.size() > 6) throw PreconditionError("compile_pattern supports at most 6 relations");
  const std::string& xv = f.fo[0].var;
  const int k = static_cast<int>(f.so.size());
  const int colours = 1 << k;

  std::vector<std::string> names;
  for (int c = 0; c < colours; ++c) {
    std::string name = "{";
    bool first = true;
    for (int i = 0; i < k; ++i) {
      if ((c >> i) & 1) {
        if (!first) name += ",";
        name += f.so[i].name;
        first = false;
      }
    }
    names.push_back(name + "}");
  }
  auto rel_bit = [&](const std::string& name, int colour) {
    for (int i = 0; i < k; ++i) {
      if (f.so[i].name == name) return ((colour >> i) & 1) != 0;
    }
    throw std::logic_error("unknown relation");
  };

  // x and y distinct with colours cx, cy; `edge` is E(x,y) = E(y,x).
  auto pair_value = [&](int cx, int cy, bool edge) {
    return evaluate(f.matrix, [&](const Expr& a) {
      switch (a.op) {
        case Op::Edge: return a.args[0] != a.args[1] && edge;
        case Op::Eq: return a.args[0] == a.args[1];
        case Op::Rel: return rel_bit(a.name, a.args[0] == xv ? cx : cy);
        default: throw PreconditionError("unsupported atom " + to_string(a));
      }
    });
  };
  auto diagonal_value = [&](int c) {
    return evaluate(f.matrix, [&](const Expr& a) {
      switch (a.op) {
        case Op::Edge: return false;
        case Op::Eq: return true;
        case Op::Rel: return rel_bit(a.name, c);
        default: throw PreconditionError("unsupported atom " + to_string(a));
      }
    });
  };

  PatternGraph p(std::move(names));
  for (int c = 0; c < colours; ++c) {
    bool self = diagonal_value(c);
    for (int d = 0; d < colours; ++d) {
      if (self || pair_value(c, d, true)) p.add_plus(c, d);
      if (self || pair_value(c, d, false)) p.add_minus(c, d);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Certificates and exact search

namespace {

void require_basic(const Graph& g, const char* op) {
  if (g.mode() != GraphMode::Basic) throw PreconditionError(std::string(op) + " needs a basic graph");
}

bool licensed(const Graph& g, const PatternGraph& p, int cx, int cy, int x, int y) {
  return g.has_edge(x, y) ? p.has_plus(cx, cy) : p.has_minus(cx, cy);
}

}  // namespace

bool verify_certificate(const Graph& g, const PatternGraph& p, const SaturationCertificate& cert) {
  require_basic(g, "verify_certificate");
  const auto n = static_cast<std::size_t>(g.n());
  if (cert.coloring.size() != n || cert.witness.size() != n) {
    throw ValidationError("certificate maps must be total over the vertex set");
  }
  for (int x = 0; x < g.n(); ++x) {
    int w = cert.witness[x];
    if (w < 0 || w >= g.n() || w == x) return false;
    int cx = cert.coloring[x];
    int cw = cert.coloring[w];
    if (cx < 0 || cx >= p.size() || cw < 0 || cw >= p.size()) return false;
    if (!licensed(g, p, cx, cw, x, w)) return false;
  }
  return true;
}

std::optional<SaturationCertificate> saturate_exact(const Graph& g, const PatternGraph& p,
                                                    std::uint64_t budget) {
  require_basic(g, "saturate_exact");
  const int n = g.n();
  const int k = p.size();
  if (n > 64) throw PreconditionError("saturate_exact needs n <= 64");
  if (n == 0) throw PreconditionError("saturation is defined for n >= 1");
  if (k == 0) return std::nullopt;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(k)) {
      throw BudgetExceeded("saturate_exact would enumerate more than " +
                           std::to_string(budget) + " colourings");
    }
    total *= static_cast<std::uint64_t>(k);
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row_mask(v);

  std::vector<int> colour(n, 0);
  std::vector<std::uint64_t> members(k, 0);
  members[0] = all;
  auto vertices_with = [&](std::uint64_t colour_set) {
    std::uint64_t out = 0;
    while (colour_set) {
      out |= members[std::countr_zero(colour_set)];
      colour_set &= colour_set - 1;
    }
    return out;
  };
  for (;;) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      std::uint64_t self = std::uint64_t{1} << x;
      std::uint64_t cand = (adj[x] & vertices_with(p.plus[colour[x]])) |
                           (~adj[x] & all & ~self & vertices_with(p.minus[colour[x]]));
      ok = cand != 0;
    }
    if (ok) {
      SaturationCertificate cert{colour, std::vector<int>(n)};
      for (int x = 0; x < n; ++x) {
        std::uint64_t self = std::uint64_t{1} << x;
        std::uint64_t cand = (adj[x] & vertices_with(p.plus[colour[x]])) |
                             (~adj[x] & all & ~self & vertices_with(p.minus[colour[x]]));
        cert.witness[x] = std::countr_zero(cand);
      }
      if (!verify_certificate(g, p, cert)) throw std::logic_error("saturate_exact built a bad certificate");
      return cert;
    }
    // Odometer step.
    int i = 0;
    while (i < n) {
      std::uint64_t bit = std::uint64_t{1} << i;
      members[colour[i]] &= ~bit;
      if (++colour[i] < k) {
        members[colour[i]] |= bit;
        break;
      }
      colour[i] = 0;
      members[0] |= bit;
      ++i;
    }
    if (i == n) return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Self-saturating cycles

bool check_self_saturating_cycle(const Graph& g, const PatternGraph& p,
                                 const SelfSaturatingCycle& cycle) {
  const auto len = cycle.vertices.size();
  if (len < 2 || cycle.colors.size() != len) return false;
  std::vector<int> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    int v = cycle.vertices[i];
    if (v < 0 || v >= g.n()) return false;
    if (cycle.colors[i] < 0 || cycle.colors[i] >= p.size()) return false;
  }
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t j = (i + 1) % len;
    if (!licensed(g, p, cycle.colors[i], cycle.colors[j], cycle.vertices[i], cycle.vertices[j])) {
      return false;
    }
  }
  return true;
}

namespace {

bool cycle_is_mixed(const Graph& g, const std::vector<int>& vertices) {
  bool edge = false;
  bool non_edge = false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    bool e = g.has_edge(vertices[i], vertices[(i + 1) % vertices.size()]);
    (e ? edge : non_edge) = true;
  }
  return edge && non_edge;
}

class CycleFinder {
 public:
  CycleFinder(const Graph& g, const PatternGraph& p, int max_len, CycleKind kind)
      : g_(g), p_(p), max_len_(max_len), kind_(kind), used_(g.n(), 0) {}

  std::optional<SelfSaturatingCycle> run() {
    for (int s = 0; s < g_.n(); ++s) {
      for (int c = 0; c < p_.size(); ++c) {
        verts_ = {s};
        cols_ = {c};
        used_[s] = 1;
        bool found = extend(0, 0);
        used_[s] = 0;
        if (found) {
          SelfSaturatingCycle out{verts_, cols_, cycle_is_mixed(g_, verts_)};
          if (!check_self_saturating_cycle(g_, p_, out)) {
            throw std::logic_error("cycle search returned an invalid cycle");
          }
          return out;
        }
      }
    }
    return std::nullopt;
  }

 private:
  // edges/non_edges count the step types used so far.
  bool extend(int edges, int non_edges) {
    int u = verts_.back();
    int cu = cols_.back();
    int s = verts_.front();
    int cs = cols_.front();
    if (verts_.size() >= 2) {
      bool e = g_.has_edge(u, s);
      if (licensed(g_, p_, cu, cs, u, s) && kind_ok(edges + e, non_edges + !e)) return true;
    }
    if (static_cast<int>(verts_.size()) >= max_len_) return false;
    for (int v = s + 1; v < g_.n(); ++v) {
      if (used_[v]) continue;
      bool e = g_.has_edge(u, v);
      std::uint64_t targets = e ? p_.plus[cu] : p_.minus[cu];
      if (kind_ == CycleKind::Pure && ((e && non_edges) || (!e && edges))) continue;
      while (targets) {
        int cv = std::countr_zero(targets);
        targets &= targets - 1;
        verts_.push_back(v);
        cols_.push_back(cv);
        used_[v] = 1;
        bool found = extend(edges + e, non_edges + !e);
        used_[v] = 0;
        if (found) return true;
        verts_.pop_back();
        cols_.pop_back();
      }
    }
    return false;
  }

  bool kind_ok(int edges, int non_edges) const {
    switch (kind_) {
      case CycleKind::Any: return true;
      case CycleKind::Mixed: return edges > 0 && non_edges > 0;
      case CycleKind::Pure: return edges == 0 || non_edges == 0;
    }
    return true;
  }

  const Graph& g_;
  const PatternGraph& p_;
  int max_len_;
  CycleKind kind_;
  std::vector<char> used_;
  std::vector<int> verts_;
  std::vector<int> cols_;
};

}  // namespace

std::optional<SelfSaturatingCycle> find_self_saturating_cycle(const Graph& g,
                                                              const PatternGraph& p,
                                                              int max_len, CycleKind kind) {
  require_basic(g, "find_self_saturating_cycle");
  if (max_len < 2) throw PreconditionError("self-saturating cycles have length >= 2");
  return CycleFinder(g, p, max_len, kind).run();
}

SelfSaturatingCycle cycle_from_certificate(const Graph& g, const SaturationCertificate& cert,
                                           int start) {
  const int n = g.n();
  if (static_cast<int>(cert.witness.size()) != n || start < 0 || start >= n) {
    throw ValidationError("certificate does not match the graph");
  }
  std::vector<int> seen_at(n, -1);
  std::vector<int> walk;
  int v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = cert.witness[v];
    if (v < 0 || v >= n) throw ValidationError("witness out of range");
  }
  SelfSaturatingCycle out;
  out.vertices.assign(walk.begin() + seen_at[v], walk.end());
  for (int u : out.vertices) out.colors.push_back(cert.coloring[u]);
  out.mixed = cycle_is_mixed(g, out.vertices);
  return out;
}

// ---------------------------------------------------------------------------
// Two-colour decider

namespace {

std::atomic<std::uint64_t> fallback_counter{0};

constexpr int kBlack = 0;
constexpr int kWhite = 1;

bool arc(std::uint64_t const* rows, int c, int d) { return (rows[c] >> d) & 1U; }

bool has_cycle2(const std::vector<std::uint64_t>& rows) {
  return arc(rows.data(), 0, 0) || arc(rows.data(), 1, 1) ||
         (arc(rows.data(), 0, 1) && arc(rows.data(), 1, 0));
}

std::vector<int> bfs_parents(const Graph& g, const std::vector<int>& comp, std::vector<int>& dist) {
  std::vector<int> parent(g.n(), -1);
  int root = comp.front();
  dist[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return parent;
}

// Colours every vertex of `vertices` (each with a neighbour in h) along a
// cycle of `rows`: all one colour if it has a loop, otherwise by BFS
// parity with roots coloured `root_colour`. Witnesses are neighbours.
void cover_by_cycle(const Graph& h, const std::vector<std::uint64_t>& rows,
                    const std::vector<int>& vertices, int root_colour, SaturationCertificate& cert) {
  int loop = arc(rows.data(), root_colour, root_colour) ? root_colour
             : arc(rows.data(), 1 - root_colour, 1 - root_colour) ? 1 - root_colour
                                                                   : -1;
  if (loop >= 0) {
    for (int v : vertices) {
      cert.coloring[v] = loop;
      cert.witness[v] = h.neighbors(v).front();
    }
    return;
  }
  std::vector<char> inside(h.n(), 0);
  for (int v : vertices) inside[v] = 1;
  std::vector<int> dist(h.n(), -1);
  for (const auto& comp : components(h)) {
    if (!inside[comp.front()]) continue;
    auto parent = bfs_parents(h, comp, dist);
    for (int v : comp) {
      cert.coloring[v] = dist[v] % 2 == 0 ? root_colour : 1 - root_colour;
      cert.witness[v] = parent[v] >= 0 ? parent[v] : h.neighbors(v).front();
    }
  }
}

bool all_degrees_positive(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) return false;
  }
  return true;
}

std::vector<int> all_vertices(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

TwoColorDecision yes(const Graph& g, const PatternGraph& p, SaturationCertificate cert,
                     std::string branch) {
  if (!verify_certificate(g, p, cert)) {
    throw std::logic_error("two-colour branch " + branch + " built an invalid certificate");
  }
  return {true, std::move(cert), std::move(branch)};
}

TwoColorDecision no(std::string branch) { return {false, std::nullopt, std::move(branch)}; }

// h has a plus-cycle, q.minus is acyclic.
TwoColorDecision one_cycle(const Graph& g, const PatternGraph& p, const Graph& h,
                           const PatternGraph& q) {
  const int n = h.n();
  SaturationCertificate cert{std::vector<int>(n, kBlack), std::vector<int>(n, -1)};
  if (all_degrees_positive(h)) {
    cover_by_cycle(h, q.plus, all_vertices(n), kBlack, cert);
    return yes(g, p, cert, "one-cycle/all-degrees");
  }
  if (q.minus[0] == 0 && q.minus[1] == 0) return no("one-cycle/no-minus");
  if (h.edge_count() == 0) return no("one-cycle/edgeless");

  // The single minus-arc runs from `b` to `w`; colours are relabelled so
  // that b plays black.
  int b = q.minus[0] ? kBlack : kWhite;
  int w = 1 - b;
  auto plus = [&](int c, int d) { return q.has_plus(c == kBlack ? b : w, d == kBlack ? b : w); };
  auto paint = [&](int logical) { return logical == kBlack ? b : w; };

  std::vector<int> active;
  std::vector<int> isolated;
  for (int v = 0; v < n; ++v) (h.degree(v) ? active : isolated).push_back(v);

  if (plus(kWhite, kWhite) || (plus(kWhite, kBlack) && plus(kBlack, kWhite))) {
    // Only the cycle through white: its loop, or the two-cycle.
    std::vector<std::uint64_t> rows(2, 0);
    if (plus(kWhite, kWhite)) {
      rows[kWhite] = std::uint64_t{1} << kWhite;
    } else {
      rows[kBlack] = std::uint64_t{1} << kWhite;
      rows[kWhite] = std::uint64_t{1} << kBlack;
    }
    SaturationCertificate logical{std::vector<int>(n, kBlack), std::vector<int>(n, -1)};
    cover_by_cycle(h, rows, active, kWhite, logical);
    int v0 = *std::find_if(active.begin(), active.end(),
                           [&](int v) { return logical.coloring[v] == kWhite; });
    for (int v : isolated) {
      logical.coloring[v] = kBlack;
      logical.witness[v] = v0;
    }
    for (int v = 0; v < n; ++v) {
      cert.coloring[v] = paint(logical.coloring[v]);
      cert.witness[v] = logical.witness[v];
    }
    return yes(g, p, cert, "one-cycle/white-on-cycle");
  }
  if (!plus(kWhite, kBlack)) return no("one-cycle/no-back-arc");
  if (!plus(kBlack, kBlack)) return {};  // unreachable shape, caller falls back

  std::vector<int> logical(n, kBlack);
  std::vector<int> witness(n, -1);
  auto finish = [&](int white_anchor, const std::string& branch) {
    for (int v : isolated) witness[v] = white_anchor;
    for (int v = 0; v < n; ++v) {
      cert.coloring[v] = paint(logical[v]);
      cert.witness[v] = witness[v];
    }
    return yes(g, p, cert, branch);
  };

  auto comps = components(h);
  for (const auto& comp : comps) {
    if (comp.size() < 3) continue;
    std::vector<int> dist(n, -1);
    auto parent = bfs_parents(h, comp, dist);
    // A vertex of maximum depth is a leaf of the BFS tree other than the root.
    int leaf = *std::max_element(comp.begin(), comp.end(),
                                 [&](int a, int c) { return dist[a] < dist[c]; });
    int u = parent[leaf];
    logical[leaf] = kWhite;
    witness[leaf] = u;
    for (int x : h.neighbors(u)) {
      if (x != leaf) {
        witness[u] = x;
        break;
      }
    }
    for (int v : comp) {
      if (v == leaf || v == u) continue;
      witness[v] = parent[v] >= 0 ? parent[v] : [&] {
        for (int x : h.neighbors(v)) {
          if (x != leaf) return x;
        }
        return h.neighbors(v).front();
      }();
    }
    for (const auto& other : comps) {
      if (&other == &comp || other.size() < 2) continue;
      for (int v : other) witness[v] = h.neighbors(v).front();
    }
    return finish(leaf, "one-cycle/large-component");
  }

  // Every non-trivial component is a single edge.
  std::vector<std::pair<int, int>> matching = h.edges();
  if (matching.size() == 1) return no("one-cycle/single-edge");
  auto [v1, v2] = matching[0];
  auto [v3, v4] = matching[1];
  logical[v1] = kWhite;
  logical[v3] = kWhite;
  witness[v1] = v2;
  witness[v2] = v3;
  witness[v3] = v4;
  witness[v4] = v1;
  for (std::size_t i = 2; i < matching.size(); ++i) {
    witness[matching[i].first] = matching[i].second;
    witness[matching[i].second] = matching[i].first;
  }
  return finish(v1, "one-cycle/matching");
}

}  // namespace

bool has_alternating_four_cycle(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a) {
    for (int b : g.neighbors(a)) {
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || g.has_edge(b, c)) continue;
        for (int d : g.neighbors(c)) {
          if (d != a && d != b && !g.has_edge(d, a)) return true;
        }
      }
    }
  }
  return false;
}

std::uint64_t two_color_fallback_count() { return fallback_counter.load(); }

TwoColorDecision fo_decide_two_color(const Graph& g, const PatternGraph& p) {
  require_basic(g, "fo_decide_two_color");
  if (p.size() != 2) throw PreconditionError("fo_decide_two_color needs exactly two colours");
  if (g.n() < 1) throw PreconditionError("saturation is defined for n >= 1");
  if (g.n() == 1) return no("single-vertex");

  std::vector<std::uint64_t> both{p.plus[0] | p.minus[0], p.plus[1] | p.minus[1]};
  bool plus_cyclic = has_cycle2(p.plus);
  bool minus_cyclic = has_cycle2(p.minus);

  if (!has_cycle2(both)) return no("acyclic");

  if (plus_cyclic && minus_cyclic) {
    SaturationCertificate cert{std::vector<int>(g.n(), kBlack), std::vector<int>(g.n(), -1)};
    if (all_degrees_positive(g)) {
      cover_by_cycle(g, p.plus, all_vertices(g.n()), kBlack, cert);
    } else {
      cover_by_cycle(complement(g), p.minus, all_vertices(g.n()), kBlack, cert);
    }
    return yes(g, p, cert, "two-cycles");
  }

  if (plus_cyclic || minus_cyclic) {
    TwoColorDecision d = plus_cyclic ? one_cycle(g, p, g, p)
                                     : one_cycle(g, p, complement(g), swap_arcs(p));
    if (!d.branch.empty()) return d;
  } else {
    return {has_alternating_four_cycle(g), std::nullopt, "alternating"};
  }

  ++fallback_counter;
  auto cert = saturate_exact(g, p);
  return {cert.has_value(), cert, "fallback"};
}

}  // namespace eso
