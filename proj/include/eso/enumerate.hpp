#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eso/formula.hpp"
#include "eso/graph.hpp"

namespace eso {

// Exhaustive and random graph sources for sweeps and tests.

/// Bit i of `code` is the i-th pair (u,v), u < v, in lexicographic order.
Graph basic_graph_from_code(int n, std::uint64_t code);
std::uint64_t basic_graph_count(int n);
void for_each_basic_graph(int n, const std::function<void(const Graph&)>& visit);

/// One labelled graph per isomorphism class, smallest code first. n <= 7.
std::vector<Graph> basic_graph_representatives(int n);

/// Loop-free directed graphs; bit i is the i-th ordered pair (u,v), u != v.
Graph directed_graph_from_code(int n, std::uint64_t code);
std::uint64_t directed_graph_count(int n);

Graph random_basic_graph(int n, double p, std::mt19937_64& rng);
Graph random_directed_graph(int n, double p, std::mt19937_64& rng);

/// Random quantifier-free matrix over `atoms` with connectives
/// ~, &, |, ->, <-> and nesting depth at most `depth`.
Expr random_matrix(const std::vector<Expr>& atoms, int depth, std::mt19937_64& rng);

/// E1:M a:x a:y . random matrix over E, =, M.
Formula random_e1aa_formula(std::mt19937_64& rng, int depth = 3);

/// E1:M1 ... E1:Mk a:x e:y . random matrix over E, =, M1..Mk. With
/// `guarded`, the matrix is wrapped as x != y & (...).
Formula random_e1k_ae_formula(int k, std::mt19937_64& rng, bool guarded = false, int depth = 3);

/// Random well-formed prefix with at most `max_len` tokens and SO arities
/// in [1, max_arity].
PrefixType random_prefix(int max_len, int max_arity, std::mt19937_64& rng);

}  // namespace eso
