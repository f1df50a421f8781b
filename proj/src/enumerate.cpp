#include "eso/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "eso/error.hpp"

namespace eso {

namespace {

std::vector<std::pair<int, int>> unordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace

std::uint64_t basic_graph_count(int n) {
  int pairs = n * (n - 1) / 2;
  if (pairs >= 63) throw PreconditionError("too many graphs to enumerate");
  return std::uint64_t{1} << pairs;
}

Graph basic_graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  auto pairs = unordered_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((code >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

void for_each_basic_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::uint64_t total = basic_graph_count(n);
  for (std::uint64_t code = 0; code < total; ++code) visit(basic_graph_from_code(n, code));
}

std::vector<Graph> basic_graph_representatives(int n) {
  if (n > 7) throw PreconditionError("isomorphism classes are enumerated for n <= 7 only");
  auto pairs = unordered_pairs(n);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Each permutation as a map from pair index to pair index.
  std::vector<std::vector<int>> pair_maps;
  for (const auto& p : perms) {
    std::vector<int> m(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) m[i] = index[p[pairs[i].first]][p[pairs[i].second]];
    pair_maps.push_back(std::move(m));
  }
  std::uint64_t total = basic_graph_count(n);
  std::vector<bool> seen(total, false);
  std::vector<Graph> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    out.push_back(basic_graph_from_code(n, code));
    for (const auto& m : pair_maps) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((code >> i) & 1U) image |= std::uint64_t{1} << m[i];
      }
      seen[image] = true;
    }
  }
  return out;
}

std::uint64_t directed_graph_count(int n) {
  int arcs = n * (n - 1);
  if (arcs >= 63) throw PreconditionError("too many graphs to enumerate");
  return std::uint64_t{1} << arcs;
}

Graph directed_graph_from_code(int n, std::uint64_t code) {
  Graph g(n, GraphMode::Directed);
  auto pairs = ordered_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((code >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

Graph random_basic_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (auto [u, v] : unordered_pairs(n)) {
    if (coin(rng)) g.add_edge(u, v);
  }
  return g;
}

Graph random_directed_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n, GraphMode::Directed);
  for (auto [u, v] : ordered_pairs(n)) {
    if (coin(rng)) g.add_edge(u, v);
  }
  return g;
}

Expr random_matrix(const std::vector<Expr>& atoms, int depth, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(atoms.size()) - 1);
  std::uniform_int_distribution<int> pick_op(0, 5);
  if (depth <= 0) return atoms[pick_atom(rng)];
  switch (pick_op(rng)) {
    case 0: return atoms[pick_atom(rng)];
    case 1: return Expr::neg(random_matrix(atoms, depth - 1, rng));
    case 2:
      return Expr::conj({random_matrix(atoms, depth - 1, rng), random_matrix(atoms, depth - 1, rng)});
    case 3:
      return Expr::disj({random_matrix(atoms, depth - 1, rng), random_matrix(atoms, depth - 1, rng)});
    case 4:
      return Expr::implies(random_matrix(atoms, depth - 1, rng), random_matrix(atoms, depth - 1, rng));
    default:
      return Expr::iff(random_matrix(atoms, depth - 1, rng), random_matrix(atoms, depth - 1, rng));
  }
}

namespace {

std::vector<Expr> graph_atoms() {
  return {Expr::edge("x", "y"), Expr::edge("y", "x"), Expr::edge("x", "x"),
          Expr::edge("y", "y"), Expr::eq("x", "y"),   Expr::truth(true)};
}

}  // namespace

Formula random_e1aa_formula(std::mt19937_64& rng, int depth) {
  auto atoms = graph_atoms();
  atoms.push_back(Expr::rel("M", {"x"}));
  atoms.push_back(Expr::rel("M", {"y"}));
  atoms.push_back(Expr::rel("M", {"x"}));
  atoms.push_back(Expr::rel("M", {"y"}));
  return Formula{{{"M", 1}},
                 {{Quantifier::Forall, "x"}, {Quantifier::Forall, "y"}},
                 random_matrix(atoms, depth, rng)};
}

Formula random_e1k_ae_formula(int k, std::mt19937_64& rng, bool guarded, int depth) {
  auto atoms = graph_atoms();
  std::vector<SoQuantifier> so;
  for (int i = 1; i <= k; ++i) {
    std::string name = "M" + std::to_string(i);
    so.push_back({name, 1});
    atoms.push_back(Expr::rel(name, {"x"}));
    atoms.push_back(Expr::rel(name, {"y"}));
  }
  Expr matrix = random_matrix(atoms, depth, rng);
  if (guarded) matrix = Expr::conj({Expr::neq("x", "y"), matrix});
  return Formula{so, {{Quantifier::Forall, "x"}, {Quantifier::Exists, "y"}}, matrix};
}

PrefixType random_prefix(int max_len, int max_arity, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> arity(1, max_arity);
  std::bernoulli_distribution coin(0.5);
  int len = len_dist(rng);
  int so = std::uniform_int_distribution<int>(0, len)(rng);
  PrefixType p;
  for (int i = 0; i < so; ++i) p.tokens.push_back(Token::so(arity(rng)));
  for (int i = so; i < len; ++i) p.tokens.push_back(coin(rng) ? Token::forall() : Token::exists());
  return p;
}

}  // namespace eso
