#include "eso/csp.hpp"

#include <algorithm>
#include <stdexcept>

#include "eso/error.hpp"
#include "text_util.hpp"

namespace eso {

namespace {

bool has(CardSet s, int k) { return (s >> k) & 1U; }

CardSet make_set(std::initializer_list<int> ks) {
  CardSet s = 0;
  for (int k : ks) s |= static_cast<CardSet>(1U << k);
  return s;
}

void require_instance(const CdCsp& p) {
  if (p.b.mode() != GraphMode::Basic) throw PreconditionError("the constraint graph must be basic");
  if (p.b.n() < 2) throw PreconditionError("a {C,D}-CSP needs a universe of at least 2 elements");
  if (p.c_set > 7 || p.d_set > 7) throw PreconditionError("cardinality sets must lie in {0,1,2}");
}

std::vector<int> complement_set(const std::vector<int>& x, int n) {
  std::vector<int> out;
  std::size_t j = 0;
  for (int v = 0; v < n; ++v) {
    if (j < x.size() && x[j] == v) {
      ++j;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> universe(int n) {
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = v;
  return out;
}

}  // namespace

std::string card_set_to_string(CardSet s) {
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < 3; ++k) {
    if (!has(s, k)) continue;
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

CardSet parse_card_set(std::string_view text) {
  CardSet s = 0;
  for (char c : text) {
    if (c >= '0' && c <= '2') {
      s |= static_cast<CardSet>(1U << (c - '0'));
    } else if (c != ',' && c != '{' && c != '}' && !detail::is_space(c)) {
      throw ValidationError("cardinality sets are lists over 0, 1, 2; got '" + std::string(text) + "'");
    }
  }
  return s;
}

CardSet flip_card_set(CardSet s) {
  CardSet out = 0;
  for (int k = 0; k < 3; ++k) {
    if (has(s, k)) out |= static_cast<CardSet>(1U << (2 - k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compilation

CspSets compile_csp(const Formula& f) {
  if (f.so.size() != 1 || f.so[0].arity != 1) {
    throw PreconditionError("compile_csp needs exactly one monadic SO relation");
  }
  if (f.fo.size() != 2 || f.fo[0].kind != Quantifier::Forall || f.fo[1].kind != Quantifier::Forall) {
    throw PreconditionError("compile_csp needs the prefix E1 a a");
  }
  if (f.uses_mark()) throw PreconditionError("compile_csp does not support the mark S");
  const std::string& rel = f.so[0].name;
  const std::string& xv = f.fo[0].var;
  const std::string& yv = f.fo[1].var;

  auto normalise = [&](const Expr& e) {
    return map_atoms(e, [&](const Expr& a) -> std::optional<Expr> {
      switch (a.op) {
        case Op::Edge:
          if (a.args[0] == a.args[1]) return Expr::truth(false);
          return Expr::edge(xv, yv);
        case Op::Eq:
          return Expr::truth(a.args[0] == a.args[1]);
        case Op::Rel:
          if (a.name != rel) throw PreconditionError("unknown relation " + a.name);
          return std::nullopt;
        case Op::Mark:
          throw PreconditionError("compile_csp does not support the mark S");
        default:
          return std::nullopt;
      }
    });
  };
  Expr base = normalise(f.matrix);
  Expr swapped = normalise(rename_vars(f.matrix, {{xv, yv}, {yv, xv}}));
  Expr sym = Expr::conj({base, swapped});

  auto value = [&](const Expr& e, bool edge, bool mx, bool my) {
    return evaluate(e, [&](const Expr& a) {
      if (a.op == Op::Edge) return edge;
      if (a.op == Op::Rel) return a.args[0] == xv ? mx : my;
      throw std::logic_error("unexpected atom after normalisation");
    });
  };
  auto cardinalities = [&](bool edge) {
    CardSet s = 0;
    if (value(sym, edge, false, false)) s |= 1;
    if (value(sym, edge, true, false)) s |= 2;  // equals (false, true) after symmetrising
    if (value(sym, edge, true, true)) s |= 4;
    return s;
  };
  CspSets out{cardinalities(true), cardinalities(false)};

  // Instances with x = y: no edges, equality true, M(x) = M(y).
  auto diagonal = [&](bool m) {
    return evaluate(f.matrix, [&](const Expr& a) {
      switch (a.op) {
        case Op::Edge: return false;
        case Op::Eq: return true;
        case Op::Rel: return m;
        default: throw std::logic_error("unexpected atom");
      }
    });
  };
  bool outside_ok = diagonal(false);
  bool inside_ok = diagonal(true);
  if (!outside_ok && !inside_ok) {
    out = {0, 0};
  } else if (!inside_ok) {
    out.c_set &= 1;
    out.d_set &= 1;
  } else if (!outside_ok) {
    out.c_set &= 4;
    out.d_set &= 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solving

bool verify_solution(const CdCsp& p, const CspSolution& x) {
  require_instance(p);
  const int n = p.b.n();
  std::vector<char> in(n, 0);
  for (int v : x.x_set) {
    if (v < 0 || v >= n) return false;
    in[v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      CardSet allowed = p.b.has_edge(u, v) ? p.c_set : p.d_set;
      if (!has(allowed, in[u] + in[v])) return false;
    }
  }
  return true;
}

std::optional<CspSolution> brute_csp(const CdCsp& p, int max_n) {
  require_instance(p);
  const int n = p.b.n();
  if (n > max_n || n > 30) {
    throw BudgetExceeded("brute_csp is limited to " + std::to_string(std::min(max_n, 30)) +
                         " elements");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    CspSolution x;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) x.x_set.push_back(v);
    }
    if (verify_solution(p, x)) return x;
  }
  return std::nullopt;
}

namespace {

struct Transform {
  const char* name;
  bool flip;
  bool swap;
};

constexpr Transform kTransforms[] = {
    {"identity", false, false},
    {"flip", true, false},
    {"swap", false, true},
    {"flip+swap", true, true},
};

// Instance with at least one C-pair and one D-pair, C and D nonempty, and
// neither 0 nor 2 in both. Returns a solution for the canonical instance
// (c, d, b) or nullopt; `matched` reports whether (c, d) is a table row.
// A `tentative` answer is the only candidate and still has to be checked.
std::optional<std::vector<int>> canonical_case(CardSet c, CardSet d, const Graph& b,
                                               bool& matched, bool& tentative, std::string& row) {
  matched = true;
  tentative = false;
  const int n = b.n();
  row = card_set_to_string(c) + "/" + card_set_to_string(d);
  if (c == make_set({0}) && d == make_set({1})) {
    auto centre = is_star(complement(b));
    if (!centre) return std::nullopt;
    return std::vector<int>{*centre};
  }
  if (c == make_set({0}) && d == make_set({2})) return std::nullopt;
  if (c == make_set({0}) && d == make_set({1, 2})) {
    std::vector<int> isolated;
    for (int v = 0; v < n; ++v) {
      if (b.degree(v) == 0) isolated.push_back(v);
    }
    tentative = true;
    return isolated;
  }
  if (c == make_set({0, 2}) && d == make_set({1})) {
    auto shores = is_complete_bipartite(complement(b));
    if (!shores) return std::nullopt;
    return shores->first;
  }
  if (c == make_set({1}) && d == make_set({1})) return std::nullopt;
  if (c == make_set({1}) && d == make_set({0, 1})) {
    auto centre = common_endpoint(b);
    if (!centre) return std::nullopt;
    return std::vector<int>{*centre};
  }
  if (c == make_set({1}) && d == make_set({0, 1, 2})) {
    auto shores = is_bipartite(b);
    if (!shores) return std::nullopt;
    return shores->first;
  }
  if (c == make_set({1, 2}) && d == make_set({0, 1})) {
    auto split = is_split(b);
    if (!split) return std::nullopt;
    return split->clique;
  }
  matched = false;
  return std::nullopt;
}

}  // namespace

CspDecision solve_csp_explained(const CdCsp& p) {
  require_instance(p);
  const int n = p.b.n();
  auto accept = [&](std::vector<int> x, std::string branch) -> CspDecision {
    std::sort(x.begin(), x.end());
    CspSolution s{std::move(x)};
    if (!verify_solution(p, s)) {
      throw std::logic_error("solve_csp branch " + branch + " produced an invalid solution");
    }
    return {std::move(s), std::move(branch)};
  };
  auto reject = [](std::string branch) -> CspDecision { return {std::nullopt, std::move(branch)}; };

  if (n <= 4) {
    auto s = brute_csp(p);
    return {s, "brute-force"};
  }
  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t c_pairs = p.b.edge_count();
  if (c_pairs == pairs) {
    if (has(p.c_set, 0)) return accept({}, "all-C");
    if (has(p.c_set, 2)) return accept(universe(n), "all-C");
    return reject("all-C");
  }
  if (c_pairs == 0) {
    if (has(p.d_set, 0)) return accept({}, "all-D");
    if (has(p.d_set, 2)) return accept(universe(n), "all-D");
    return reject("all-D");
  }
  if (p.c_set == 0 || p.d_set == 0) return reject("empty-set");
  CardSet both = p.c_set & p.d_set;
  if (has(both, 0)) return accept({}, "empty-solution");
  if (has(both, 2)) return accept(universe(n), "full-solution");

  for (const Transform& t : kTransforms) {
    CardSet c = t.flip ? flip_card_set(p.c_set) : p.c_set;
    CardSet d = t.flip ? flip_card_set(p.d_set) : p.d_set;
    if (t.swap) std::swap(c, d);
    Graph b = t.swap ? complement(p.b) : p.b;
    bool matched = false;
    bool tentative = false;
    std::string row;
    auto x = canonical_case(c, d, b, matched, tentative, row);
    if (!matched) continue;
    std::string branch = std::string(t.name) + ":" + row;
    if (!x) return reject(branch);
    std::vector<int> sol = t.flip ? complement_set(*x, n) : *x;
    if (tentative && !verify_solution(p, CspSolution{sol})) return reject(branch);
    return accept(std::move(sol), branch);
  }
  throw std::logic_error("no case covers C=" + card_set_to_string(p.c_set) +
                         " D=" + card_set_to_string(p.d_set));
}

std::optional<CspSolution> solve_csp(const CdCsp& p) { return solve_csp_explained(p).solution; }

}  // namespace eso
