#include "eso/reductions.hpp"

#include <deque>

#include "eso/error.hpp"
#include "eso/formula.hpp"
#include "eso/mcheck.hpp"

namespace eso {

void validate(const UnreachInstance& inst) {
  if (inst.g.mode() != GraphMode::Directed) throw PreconditionError("unreach needs a directed graph");
  const int n = inst.g.n();
  if (inst.s < 0 || inst.s >= n || inst.t < 0 || inst.t >= n) {
    throw PreconditionError("s and t must be vertices of the graph");
  }
  if (inst.s == inst.t) throw PreconditionError("s and t must differ");
  if (!inst.names.empty() && static_cast<int>(inst.names.size()) != n) {
    throw PreconditionError("vertex names must cover every vertex");
  }
}

namespace {

std::string name_of(const UnreachInstance& inst, int v) {
  return inst.names.empty() ? "v" + std::to_string(v) : inst.names[v];
}

GadgetOutput shadow_core(const UnreachInstance& inst, GraphMode mode) {
  validate(inst);
  const int n = inst.g.n();
  GadgetOutput out{Graph(4 * n, mode), {}};
  Graph& b = out.graph;
  for (int v = 0; v < n; ++v) {
    std::string name = name_of(inst, v);
    out.roles.insert(out.roles.end(), {name, name + "_bar", name + "'", name + "_bar'"});
    b.add_edge(gadget_vertex(v), gadget_bar(v));
    b.add_edge(gadget_shadow(v), gadget_bar_shadow(v));
    b.add_edge(gadget_vertex(v), gadget_shadow(v));
    b.add_edge(gadget_bar(v), gadget_bar_shadow(v));
  }
  for (auto [u, v] : inst.g.edges()) b.add_edge(gadget_vertex(u), gadget_shadow(v));
  b.add_edge(gadget_bar(inst.s), gadget_shadow(inst.s));
  b.add_edge(gadget_vertex(inst.t), gadget_bar_shadow(inst.t));
  return out;
}

std::vector<int> shadow_vertices(int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    out.push_back(gadget_shadow(v));
    out.push_back(gadget_bar_shadow(v));
  }
  return out;
}

}  // namespace

GadgetOutput reduce_unreach_shadow(const UnreachInstance& inst) {
  GadgetOutput out = shadow_core(inst, GraphMode::Basic);
  out.graph.set_marks(shadow_vertices(inst.g.n()));
  return out;
}

GadgetOutput reduce_unreach_undirected(const UnreachInstance& inst) {
  GadgetOutput out = shadow_core(inst, GraphMode::Undirected);
  for (int v : shadow_vertices(inst.g.n())) out.graph.add_edge(v, v);
  return out;
}

GadgetOutput reduce_unreach_e1eaa(const UnreachInstance& inst) {
  GadgetOutput out = shadow_core(inst, GraphMode::Basic);
  Graph& b = out.graph;
  int z = b.add_vertex();
  out.roles.push_back("z*");
  for (int v : shadow_vertices(inst.g.n())) b.add_edge(z, v);
  for (const char* t : {"p", "q"}) {
    int first = b.n();
    for (int i = 1; i <= 3; ++i) {
      b.add_vertex();
      out.roles.push_back(std::string(t) + std::to_string(i));
    }
    b.add_edge(first, first + 1);
    b.add_edge(first, first + 2);
    b.add_edge(first + 1, first + 2);
    b.add_edge(z, first + 2);
  }
  return out;
}

bool reachable(const Graph& g, int s, int t) {
  std::vector<char> seen(g.n(), 0);
  std::deque<int> queue{s};
  seen[s] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == t) return true;
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return false;
}

bool decide_unreach_shadow(const UnreachInstance& inst) {
  GadgetOutput out = reduce_unreach_shadow(inst);
  return solve_mono_forall2(build_unreach_formulas().phi_shadow, out.graph).has_value();
}

bool decide_unreach_undirected(const UnreachInstance& inst) {
  GadgetOutput out = reduce_unreach_undirected(inst);
  return solve_mono_forall2(build_unreach_formulas().psi_dblprime, out.graph).has_value();
}

bool decide_unreach_e1eaa(const UnreachInstance& inst) {
  GadgetOutput out = reduce_unreach_e1eaa(inst);
  Formula psi = build_unreach_formulas().psi_prime;
  for (int z = 0; z < out.graph.n(); ++z) {
    if (solve_mono_forall2(psi, out.graph, {{"z", z}})) return true;
  }
  return false;
}

UnreachInstance sample_unreach_instance() {
  enum { s, a, b, c, t };
  UnreachInstance inst;
  inst.g = graph_from_edges(5, {{s, a}, {a, c}, {c, b}, {b, t}, {t, c}}, GraphMode::Directed);
  inst.s = s;
  inst.t = t;
  inst.names = {"s", "a", "b", "c", "t"};
  return inst;
}

Graph gadget_Am(const Graph& g, int u, int v, int m) {
  if (g.mode() != GraphMode::Basic) throw PreconditionError("gadget_Am needs a basic graph");
  if (m < 2) throw PreconditionError("gadget_Am needs m >= 2");
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) throw PreconditionError("vertex out of range");
  if (u == v) throw PreconditionError("gadget_Am needs u != v");
  Graph out = g;
  for (int anchor : {u, v}) {
    int prev = anchor;
    for (int i = 1; i < 2 * m; ++i) {
      int w = out.add_vertex();
      out.add_edge(prev, w);
      prev = w;
    }
    out.add_edge(prev, anchor);
  }
  return out;
}

bool decide_even_cycle(const Graph& g, std::uint64_t budget) {
  Graph sub = subdivide(g);
  for (const auto& comp : components(sub)) {
    if (has_cycle_mod(induced_subgraph(sub, comp), 4, true, budget)) return true;
  }
  return false;
}

}  // namespace eso
