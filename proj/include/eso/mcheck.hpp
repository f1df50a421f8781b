#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eso/formula.hpp"
#include "eso/graph.hpp"

namespace eso {

/// Extension of one second-order relation: a sorted set of tuples over [0,n).
struct RelationExtension {
  int arity = 1;
  std::vector<std::vector<int>> tuples;

  bool contains(const std::vector<int>& tuple) const;
  bool operator==(const RelationExtension&) const = default;
};

using SoAssignment = std::map<std::string, RelationExtension>;

/// Default cap on the number of candidate SO assignments (2^24).
inline constexpr std::uint64_t kDefaultModelBudget = std::uint64_t{1} << 24;

/// Number of SO atoms a search over `g` must decide: sum of n^arity.
std::uint64_t so_atom_count(const Formula& f, int n);

/// Brute-force model checking. Searches SO assignments depth-first,
/// assigning one ground atom at a time and evaluating the first-order part
/// in three-valued logic after each step; a definite false prunes the
/// branch. The first-order part is expanded over the prefix in order.
/// Throws BudgetExceeded when 2^(so_atom_count) exceeds `budget`, and
/// ValidationError when f uses S but g carries no marks.
std::optional<SoAssignment> models(const Formula& f, const Graph& g,
                                   std::uint64_t budget = kDefaultModelBudget);

/// Two-valued check of g, assignment |= FO part of f by full expansion.
bool satisfies(const Formula& f, const Graph& g, const SoAssignment& assignment);

/// Polynomial decision for one monadic SO variable M under two universal
/// variables. FO variables listed in `constants` are fixed to the given
/// vertices; the remaining ones must be exactly two universals. Each
/// ordered vertex pair yields binary clauses on M(u), M(v), solved by
/// strong components of the implication graph. Returns the members of M.
std::optional<std::vector<int>> solve_mono_forall2(
    const Formula& f, const Graph& g, const std::map<std::string, int>& constants = {});

/// Convenience wrapper producing an SoAssignment for the single relation.
SoAssignment monadic_assignment(const std::string& name, const std::vector<int>& members);

}  // namespace eso
