#include "eso/mcheck.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "eso/error.hpp"

namespace eso {

bool RelationExtension::contains(const std::vector<int>& tuple) const {
  return std::binary_search(tuples.begin(), tuples.end(), tuple);
}

std::uint64_t so_atom_count(const Formula& f, int n) {
  std::uint64_t total = 0;
  for (const auto& q : f.so) {
    std::uint64_t size = 1;
    for (int i = 0; i < q.arity; ++i) size *= static_cast<std::uint64_t>(n);
    total += size;
  }
  return total;
}

SoAssignment monadic_assignment(const std::string& name, const std::vector<int>& members) {
  RelationExtension ext{1, {}};
  for (int v : members) ext.tuples.push_back({v});
  std::sort(ext.tuples.begin(), ext.tuples.end());
  return {{name, ext}};
}

namespace {

void check_vocabulary(const Formula& f, const Graph& g) {
  if (f.uses_mark() && !g.has_marks()) {
    throw ValidationError("formula uses S but the graph has no marks");
  }
}

// Kleene values: 0 false, 1 unknown, 2 true. AND is min, OR is max.
using Tri = std::uint8_t;
constexpr Tri kFalse = 0;
constexpr Tri kUnknown = 1;
constexpr Tri kTrue = 2;

// Matrix compiled against variable and relation indices.
class CompiledMatrix {
 public:
  CompiledMatrix(const Formula& f, int n) : n_(n) {
    for (std::size_t i = 0; i < f.fo.size(); ++i) var_index_[f.fo[i].var] = static_cast<int>(i);
    std::uint64_t offset = 0;
    for (const auto& q : f.so) {
      rel_index_[q.name] = static_cast<int>(arity_.size());
      arity_.push_back(q.arity);
      offset_.push_back(offset);
      std::uint64_t size = 1;
      for (int i = 0; i < q.arity; ++i) size *= static_cast<std::uint64_t>(n);
      offset += size;
    }
    atom_count_ = offset;
    root_ = compile(f.matrix);
  }

  std::uint64_t atom_count() const { return atom_count_; }
  int relation_count() const { return static_cast<int>(arity_.size()); }
  int arity(int r) const { return arity_[r]; }
  std::uint64_t offset(int r) const { return offset_[r]; }

  Tri eval(const Graph& g, const std::vector<int>& env, const std::vector<Tri>& so) const {
    return eval(root_, g, env, so);
  }

 private:
  struct Node {
    Op op;
    int rel = -1;
    std::vector<int> vars;
    std::vector<int> kids;
  };

  int compile(const Expr& e) {
    Node node{e.op, -1, {}, {}};
    for (const auto& a : e.args) node.vars.push_back(var_index_.at(a));
    if (e.op == Op::Rel) node.rel = rel_index_.at(e.name);
    for (const auto& k : e.kids) node.kids.push_back(compile(k));
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  Tri eval(int id, const Graph& g, const std::vector<int>& env, const std::vector<Tri>& so) const {
    const Node& nd = nodes_[id];
    switch (nd.op) {
      case Op::True: return kTrue;
      case Op::False: return kFalse;
      case Op::Edge: return g.has_edge(env[nd.vars[0]], env[nd.vars[1]]) ? kTrue : kFalse;
      case Op::Mark: return g.marked(env[nd.vars[0]]) ? kTrue : kFalse;
      case Op::Eq: return env[nd.vars[0]] == env[nd.vars[1]] ? kTrue : kFalse;
      case Op::Rel: {
        std::uint64_t index = 0;
        for (int v : nd.vars) index = index * n_ + env[v];
        return so[offset_[nd.rel] + index];
      }
      case Op::Not: return kTrue - eval(nd.kids[0], g, env, so);
      case Op::And: {
        Tri r = kTrue;
        for (int k : nd.kids) {
          r = std::min(r, eval(k, g, env, so));
          if (r == kFalse) break;
        }
        return r;
      }
      case Op::Or: {
        Tri r = kFalse;
        for (int k : nd.kids) {
          r = std::max(r, eval(k, g, env, so));
          if (r == kTrue) break;
        }
        return r;
      }
      case Op::Implies: {
        Tri a = eval(nd.kids[0], g, env, so);
        if (a == kFalse) return kTrue;
        return std::max<Tri>(kTrue - a, eval(nd.kids[1], g, env, so));
      }
      case Op::Iff: {
        Tri a = eval(nd.kids[0], g, env, so);
        Tri b = eval(nd.kids[1], g, env, so);
        if (a == kUnknown || b == kUnknown) return kUnknown;
        return a == b ? kTrue : kFalse;
      }
    }
    return kUnknown;
  }

  int n_;
  std::map<std::string, int> var_index_;
  std::map<std::string, int> rel_index_;
  std::vector<int> arity_;
  std::vector<std::uint64_t> offset_;
  std::uint64_t atom_count_ = 0;
  std::vector<Node> nodes_;
  int root_ = 0;
};

class SoSearch {
 public:
  SoSearch(const Formula& f, const Graph& g) : f_(f), g_(g), matrix_(f, g.n()) {
    const int n = g.n();
    values_.assign(matrix_.atom_count(), kUnknown);
    env_.assign(f.fo.size(), 0);
    // Atoms sorted by (largest vertex, relation, tuple) so that each prefix
    // of the order decides everything about an initial vertex segment.
    std::vector<std::tuple<int, int, std::vector<int>, std::uint64_t>> keyed;
    for (int r = 0; r < matrix_.relation_count(); ++r) {
      int k = matrix_.arity(r);
      std::uint64_t size = 1;
      for (int i = 0; i < k; ++i) size *= static_cast<std::uint64_t>(n);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::vector<int> tuple(k);
        std::uint64_t rest = idx;
        for (int i = k - 1; i >= 0; --i) {
          tuple[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        int top = *std::max_element(tuple.begin(), tuple.end());
        keyed.emplace_back(top, r, tuple, matrix_.offset(r) + idx);
      }
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& k : keyed) order_.push_back(std::get<3>(k));
  }

  bool run() { return search(0); }

  SoAssignment assignment() const {
    SoAssignment out;
    const int n = g_.n();
    for (int r = 0; r < matrix_.relation_count(); ++r) {
      RelationExtension ext{matrix_.arity(r), {}};
      int k = ext.arity;
      std::uint64_t size = 1;
      for (int i = 0; i < k; ++i) size *= static_cast<std::uint64_t>(n);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        if (values_[matrix_.offset(r) + idx] != kTrue) continue;
        std::vector<int> tuple(k);
        std::uint64_t rest = idx;
        for (int i = k - 1; i >= 0; --i) {
          tuple[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        ext.tuples.push_back(tuple);
      }
      std::sort(ext.tuples.begin(), ext.tuples.end());
      out[f_.so[r].name] = std::move(ext);
    }
    return out;
  }

 private:
  bool search(std::size_t depth) {
    Tri v = evaluate_fo(0);
    if (v == kFalse) return false;
    if (v == kTrue) {
      for (std::size_t i = depth; i < order_.size(); ++i) values_[order_[i]] = kFalse;
      return true;
    }
    if (depth == order_.size()) throw std::logic_error("unknown value after full assignment");
    std::uint64_t atom = order_[depth];
    for (Tri choice : {kFalse, kTrue}) {
      values_[atom] = choice;
      if (search(depth + 1)) return true;
    }
    values_[atom] = kUnknown;
    return false;
  }

  Tri evaluate_fo(std::size_t q) {
    if (q == f_.fo.size()) return matrix_.eval(g_, env_, values_);
    bool forall = f_.fo[q].kind == Quantifier::Forall;
    Tri r = forall ? kTrue : kFalse;
    for (int v = 0; v < g_.n(); ++v) {
      env_[q] = v;
      Tri sub = evaluate_fo(q + 1);
      r = forall ? std::min(r, sub) : std::max(r, sub);
      if (r == (forall ? kFalse : kTrue)) break;
    }
    return r;
  }

  const Formula& f_;
  const Graph& g_;
  CompiledMatrix matrix_;
  std::vector<Tri> values_;
  std::vector<int> env_;
  std::vector<std::uint64_t> order_;
};

}  // namespace

std::optional<SoAssignment> models(const Formula& f, const Graph& g, std::uint64_t budget) {
  check_vocabulary(f, g);
  std::uint64_t bits = so_atom_count(f, g.n());
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) {
    throw BudgetExceeded("second-order search space 2^" + std::to_string(bits) +
                         " exceeds budget " + std::to_string(budget));
  }
  SoSearch search(f, g);
  if (!search.run()) return std::nullopt;
  SoAssignment out = search.assignment();
  if (!satisfies(f, g, out)) throw std::logic_error("model search returned a non-witness");
  return out;
}

bool satisfies(const Formula& f, const Graph& g, const SoAssignment& assignment) {
  check_vocabulary(f, g);
  for (const auto& q : f.so) {
    auto it = assignment.find(q.name);
    if (it == assignment.end()) {
      throw ValidationError("assignment is missing relation '" + q.name + "'");
    }
    if (it->second.arity != q.arity) {
      throw ValidationError("assignment for '" + q.name + "' has the wrong arity");
    }
    for (const auto& t : it->second.tuples) {
      if (static_cast<int>(t.size()) != q.arity ||
          std::any_of(t.begin(), t.end(), [&](int v) { return v < 0 || v >= g.n(); })) {
        throw ValidationError("assignment for '" + q.name + "' has an invalid tuple");
      }
    }
  }
  std::map<std::string, int> env;
  auto atom = [&](const Expr& a) {
    std::vector<int> vs;
    for (const auto& name : a.args) vs.push_back(env.at(name));
    switch (a.op) {
      case Op::Edge: return g.has_edge(vs[0], vs[1]);
      case Op::Mark: return g.marked(vs[0]);
      case Op::Eq: return vs[0] == vs[1];
      case Op::Rel: return assignment.at(a.name).contains(vs);
      default: throw std::logic_error("unexpected atom");
    }
  };
  std::function<bool(std::size_t)> expand = [&](std::size_t q) -> bool {
    if (q == f.fo.size()) return evaluate(f.matrix, atom);
    bool forall = f.fo[q].kind == Quantifier::Forall;
    for (int v = 0; v < g.n(); ++v) {
      env[f.fo[q].var] = v;
      bool sub = expand(q + 1);
      if (forall && !sub) return false;
      if (!forall && sub) return true;
    }
    return forall;
  };
  return expand(0);
}

// ---------------------------------------------------------------------------
// 2-SAT oracle

namespace {

class TwoSat {
 public:
  explicit TwoSat(int vars) : n_(vars), adj_(2 * vars) {}

  static int lit(int var, bool value) { return 2 * var + (value ? 0 : 1); }

  void add_clause(int a, int b) {
    adj_[a ^ 1].push_back(b);
    adj_[b ^ 1].push_back(a);
  }

  std::optional<std::vector<bool>> solve() {
    const int nodes = 2 * n_;
    index_.assign(nodes, -1);
    low_.assign(nodes, 0);
    comp_.assign(nodes, -1);
    on_stack_.assign(nodes, 0);
    for (int v = 0; v < nodes; ++v) {
      if (index_[v] < 0) strongconnect(v);
    }
    std::vector<bool> value(n_);
    for (int i = 0; i < n_; ++i) {
      if (comp_[2 * i] == comp_[2 * i + 1]) return std::nullopt;
      // Components are numbered in reverse topological order.
      value[i] = comp_[2 * i] < comp_[2 * i + 1];
    }
    return value;
  }

 private:
  void strongconnect(int v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = 1;
    for (int w : adj_[v]) {
      if (index_[w] < 0) {
        strongconnect(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] == index_[v]) {
      int w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = 0;
        comp_[w] = components_;
      } while (w != v);
      ++components_;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> index_, low_, comp_;
  std::vector<char> on_stack_;
  std::vector<int> stack_;
  int counter_ = 0;
  int components_ = 0;
};

void check_mono_fragment(const Expr& e, const std::string& rel, const std::string& x,
                         const std::string& y) {
  switch (e.op) {
    case Op::Rel:
      if (e.name != rel || e.args.size() != 1 || (e.args[0] != x && e.args[0] != y)) {
        throw PreconditionError("atom " + to_string(e) +
                                " is outside the monadic two-variable fragment");
      }
      return;
    default:
      for (const auto& k : e.kids) check_mono_fragment(k, rel, x, y);
  }
}

}  // namespace

std::optional<std::vector<int>> solve_mono_forall2(const Formula& f, const Graph& g,
                                                   const std::map<std::string, int>& constants) {
  check_vocabulary(f, g);
  if (f.so.size() != 1 || f.so[0].arity != 1) {
    throw PreconditionError("solve_mono_forall2 needs exactly one monadic SO relation");
  }
  std::vector<std::string> universals;
  for (const auto& q : f.fo) {
    if (constants.count(q.var)) continue;
    if (q.kind != Quantifier::Forall) {
      throw PreconditionError("free existential variable '" + q.var + "' needs a constant");
    }
    universals.push_back(q.var);
  }
  for (const auto& [name, v] : constants) {
    if (std::none_of(f.fo.begin(), f.fo.end(), [&](const FoQuantifier& q) { return q.var == name; })) {
      throw PreconditionError("constant for unknown variable '" + name + "'");
    }
    if (v < 0 || v >= g.n()) throw PreconditionError("constant vertex out of range");
  }
  if (universals.size() != 2) {
    throw PreconditionError("solve_mono_forall2 needs exactly two universal variables");
  }
  const std::string& rel = f.so[0].name;
  const std::string& xv = universals[0];
  const std::string& yv = universals[1];
  check_mono_fragment(f.matrix, rel, xv, yv);

  const int n = g.n();
  std::map<std::string, int> env(constants.begin(), constants.end());
  auto holds = [&](int u, int v, bool mu, bool mv) {
    env[xv] = u;
    env[yv] = v;
    return evaluate(f.matrix, [&](const Expr& a) {
      switch (a.op) {
        case Op::Edge: return g.has_edge(env.at(a.args[0]), env.at(a.args[1]));
        case Op::Mark: return g.marked(env.at(a.args[0]));
        case Op::Eq: return env.at(a.args[0]) == env.at(a.args[1]);
        case Op::Rel: return a.args[0] == xv ? mu : mv;
        default: throw std::logic_error("unexpected atom");
      }
    });
  };

  TwoSat sat(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      int allowed = 0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if (u == v && a != b) continue;
          if (holds(u, v, a, b)) {
            ++allowed;
            continue;
          }
          // Forbid M(u)=a together with M(v)=b.
          sat.add_clause(TwoSat::lit(u, !a), TwoSat::lit(v, !b));
        }
      }
      if (allowed == 0) return std::nullopt;
    }
  }
  auto solution = sat.solve();
  if (!solution) return std::nullopt;
  std::vector<int> members;
  for (int v = 0; v < n; ++v) {
    if ((*solution)[v]) members.push_back(v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!holds(u, v, (*solution)[u], (*solution)[v])) {
        throw std::logic_error("2-SAT solution fails direct evaluation");
      }
    }
  }
  return members;
}

}  // namespace eso
