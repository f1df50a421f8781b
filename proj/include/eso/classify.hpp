#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eso/graph.hpp"
#include "eso/prefix.hpp"

namespace eso {

enum class ComplexityClass { FO = 0, L = 1, NL = 2, NP = 3 };

std::string to_string(ComplexityClass c);
ComplexityClass parse_complexity_class(std::string_view text);

/// Regular pattern over prefix tokens: a sequence of elements, each an
/// SO token (fixed arity or any), a, e, or the group (ae), optionally
/// starred. Written as e.g. "E*ae", "E1e*aa", "(ae)*", "E*(ae)*".
class PrefixPattern {
 public:
  enum class Atom { SoFixed, SoAny, Forall, Exists, ForallExists };

  struct Element {
    Atom atom = Atom::Forall;
    int arity = 0;  // SoFixed only
    bool star = false;
    bool operator==(const Element&) const = default;
  };

  PrefixPattern() = default;
  explicit PrefixPattern(std::vector<Element> elements) : elements_(std::move(elements)) {}

  static PrefixPattern parse(std::string_view text);

  const std::vector<Element>& elements() const { return elements_; }
  bool operator==(const PrefixPattern&) const = default;

 private:
  std::vector<Element> elements_;
};

std::string to_string(const PrefixPattern& p);

/// True iff some word of `pat` becomes `w` after deleting tokens and/or
/// lowering SO arities.
bool covered_by(const PrefixType& w, const PrefixPattern& pat);

struct TableRow {
  ComplexityClass klass;
  std::vector<PrefixPattern> at_most;  // classify looks these up
  std::vector<PrefixPattern> at_least;
};

/// Rows in ascending class order; the last row catches everything.
const std::vector<TableRow>& dichotomy_table(GraphMode mode);

struct Classification {
  ComplexityClass klass;
  PrefixPattern matched_pattern;
  int row = 0;  // index into dichotomy_table(mode)
};

/// First row (in ascending class order) with a pattern covering w.
Classification classify(const PrefixType& w, GraphMode mode);

/// w can be obtained from v by deleting tokens and lowering arities.
bool subsumed_by(const PrefixType& w, const PrefixType& v);

}  // namespace eso
