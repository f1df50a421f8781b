#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eso/formula.hpp"
#include "eso/graph.hpp"

namespace eso {

/// Subset of {0,1,2} as a bit mask: bit k set iff cardinality k is allowed.
using CardSet = std::uint8_t;

std::string card_set_to_string(CardSet s);  // "{0,2}"
/// Accepts "0,1,2", "{1}", "" and "{}".
CardSet parse_card_set(std::string_view text);
/// {2 - k : k in s}
CardSet flip_card_set(CardSet s);

/// Pairs joined in `b` carry constraint C, all other pairs carry D.
struct CdCsp {
  CardSet c_set = 0;
  CardSet d_set = 0;
  Graph b;
};

struct CspSolution {
  std::vector<int> x_set;  // sorted
  bool operator==(const CspSolution&) const = default;
};

struct CspSets {
  CardSet c_set = 0;
  CardSet d_set = 0;
  bool operator==(const CspSets&) const = default;
};

/// Cardinality constraints of an E1 a a formula over basic graphs. The
/// matrix is normalised (loops false, E(y,x) read as E(x,y), x = y false),
/// symmetrised by conjoining its x/y swap, and evaluated with E(x,y) true
/// (C) and false (D). The diagonal instances x = y of the universal
/// quantifiers force M to be empty or full, or rule out every M; that
/// restriction is folded into both sets.
CspSets compile_csp(const Formula& f);

bool verify_solution(const CdCsp& p, const CspSolution& x);

inline constexpr int kDefaultBruteCspLimit = 20;

std::optional<CspSolution> brute_csp(const CdCsp& p, int max_n = kDefaultBruteCspLimit);

struct CspDecision {
  std::optional<CspSolution> solution;
  std::string branch;
};

/// Case analysis over (C, D) after normalising by the symmetries
/// (C, D, B) -> (2-C, 2-D, B) and (C, D, B) -> (D, C, complement B).
/// Instances with n <= 4 go to brute force.
CspDecision solve_csp_explained(const CdCsp& p);
std::optional<CspSolution> solve_csp(const CdCsp& p);

}  // namespace eso
