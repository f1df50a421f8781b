#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eso {

/// One quantifier of a prefix: an existential second-order quantifier of
/// some arity, a universal first-order quantifier, or an existential one.
struct Token {
  enum class Kind { SecondOrder, Forall, Exists };

  Kind kind = Kind::Forall;
  int arity = 0;  // only meaningful for SecondOrder

  static Token so(int arity) { return {Kind::SecondOrder, arity}; }
  static Token forall() { return {Kind::Forall, 0}; }
  static Token exists() { return {Kind::Exists, 0}; }

  bool operator==(const Token&) const = default;
};

/// Concrete quantifier string such as E1E1ae.
struct PrefixType {
  std::vector<Token> tokens;

  bool operator==(const PrefixType&) const = default;

  /// All second-order tokens come before all first-order ones.
  bool well_formed() const;
};

/// Parses "E1E1ae", "E1 a e", "E₁aa" and similar. Whitespace is ignored;
/// every E must carry an arity.
PrefixType parse_prefix(std::string_view text);

/// Compact ASCII rendering, e.g. "E1E2aae". The empty prefix renders as "".
std::string to_string(const PrefixType& p);

}  // namespace eso
