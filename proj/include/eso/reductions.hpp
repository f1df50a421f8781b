#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eso/graph.hpp"

namespace eso {

/// Is there no directed path from s to t in g?
struct UnreachInstance {
  Graph g{0, GraphMode::Directed};
  int s = 0;
  int t = 0;
  std::vector<std::string> names;  // optional vertex names, default v<i>
};

void validate(const UnreachInstance& inst);

struct GadgetOutput {
  Graph graph;
  std::vector<std::string> roles;  // one tag per constructed vertex
};

// Vertex i of G becomes 4i (v), 4i+1 (v bar), 4i+2 (v'), 4i+3 (v bar');
// z* is 4|V| and the triangles p1..p3, q1..q3 follow it.
inline int gadget_vertex(int v) { return 4 * v; }
inline int gadget_bar(int v) { return 4 * v + 1; }
inline int gadget_shadow(int v) { return 4 * v + 2; }
inline int gadget_bar_shadow(int v) { return 4 * v + 3; }
inline int gadget_z_star(const UnreachInstance& inst) { return 4 * inst.g.n(); }

/// Basic graph with S = shadow vertices.
GadgetOutput reduce_unreach_shadow(const UnreachInstance& inst);
/// Same construction as an undirected graph; S becomes self-loops.
GadgetOutput reduce_unreach_undirected(const UnreachInstance& inst);
/// Shadow graph plus z* joined to every shadow vertex and two triangles
/// whose third corners are joined to z*.
GadgetOutput reduce_unreach_e1eaa(const UnreachInstance& inst);

bool reachable(const Graph& g, int s, int t);

// Decisions through the matching formula and the 2-SAT oracle. Each
// returns true iff t is unreachable from s.
bool decide_unreach_shadow(const UnreachInstance& inst);
bool decide_unreach_undirected(const UnreachInstance& inst);
/// Tries every vertex of the gadget for the existential z.
bool decide_unreach_e1eaa(const UnreachInstance& inst);

/// The five-vertex instance s, a, b, c, t with arcs s->a, a->c, c->b,
/// b->t, t->c.
UnreachInstance sample_unreach_instance();

/// Attaches a fresh 2m-cycle at u and another at v.
Graph gadget_Am(const Graph& g, int u, int v, int m);

/// Subdivides every edge and asks whether some component of the result
/// has a simple cycle of length divisible by 4.
bool decide_even_cycle(const Graph& g, std::uint64_t budget = kDefaultCycleBudget);

}  // namespace eso
