#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eso/prefix.hpp"

namespace eso {

/// Node kinds of a quantifier-free matrix. Edge is the input relation E,
/// Mark the optional unary input relation S, Rel a quantified
/// second-order variable.
enum class Op { True, False, Edge, Mark, Rel, Eq, Not, And, Or, Implies, Iff };

/// Quantifier-free expression tree. And/Or are n-ary; Implies and Iff are
/// binary. Atoms keep their argument variables in `args`.
struct Expr {
  Op op = Op::True;
  std::string name;
  std::vector<std::string> args;
  std::vector<Expr> kids;

  bool operator==(const Expr&) const = default;

  bool is_atom() const;

  static Expr truth(bool value);
  static Expr edge(std::string x, std::string y);
  static Expr mark(std::string x);
  static Expr rel(std::string name, std::vector<std::string> args);
  static Expr eq(std::string x, std::string y);
  static Expr neq(std::string x, std::string y);
  static Expr neg(Expr e);
  // Collapse to the single operand when given one, to True/False when empty.
  static Expr conj(std::vector<Expr> parts);
  static Expr disj(std::vector<Expr> parts);
  static Expr implies(Expr lhs, Expr rhs);
  static Expr iff(Expr lhs, Expr rhs);
};

struct SoQuantifier {
  std::string name;
  int arity = 1;
  bool operator==(const SoQuantifier&) const = default;
};

enum class Quantifier { Forall, Exists };

struct FoQuantifier {
  Quantifier kind = Quantifier::Forall;
  std::string var;
  bool operator==(const FoQuantifier&) const = default;
};

/// Prenex existential second-order formula over the vocabulary
/// {E, S} plus the declared second-order variables.
struct Formula {
  std::vector<SoQuantifier> so;
  std::vector<FoQuantifier> fo;
  Expr matrix;

  bool operator==(const Formula&) const = default;

  const SoQuantifier* find_relation(std::string_view name) const;
  bool uses_mark() const;
};

struct FormulaOptions {
  int max_so_arity = 2;
};

/// Parses the textual syntax
///   E1:M a:x a:y . M(x) | ~M(y)
/// and validates the result. '#' starts a comment running to end of line.
Formula parse_formula(std::string_view text, const FormulaOptions& options = {});

/// Throws ValidationError if `f` breaks a structural rule: unbound or
/// doubly bound variables, undeclared relations, arity mismatches,
/// reserved relation names, or arities beyond the configured cap.
void validate(const Formula& f, const FormulaOptions& options = {});

std::string to_string(const Expr& e);
std::string to_string(const Formula& f);

PrefixType prefix_type(const Formula& f);

/// Evaluates `e` in two-valued logic; `atom` supplies the truth value of
/// every Edge, Mark, Rel and Eq leaf.
bool evaluate(const Expr& e, const std::function<bool(const Expr&)>& atom);

/// Rebuilds `e` bottom-up, replacing every atom for which `replace`
/// returns a value.
Expr map_atoms(const Expr& e, const std::function<std::optional<Expr>(const Expr&)>& replace);

/// Renames variables simultaneously, e.g. {x->y, y->x} swaps them.
Expr rename_vars(const Expr& e, const std::map<std::string, std::string>& renaming);

bool mentions_mark(const Expr& e);

// Builders for the formulas used throughout the library.

/// E C1 ... E Cm a:x e:y: x has exactly one colour, its witness y is a
/// neighbour carrying the next colour modulo m. Requires m >= 2.
Formula build_phi_m(int m);

/// Three colours packed into two monadic relations:
/// (C1&C2), (C1&~C2), (~C1&C2) in cyclic order.
Formula build_phi3_two_predicates();

/// E2:F a:x e:y . E(x,y) & F(x,y) & ~F(y,x) & (F(x,x) <-> ~F(y,y))
Formula build_phi_A2();

struct UnreachFormulas {
  Formula phi_shadow;    // over (E, S), prefix E1aa
  Formula psi_prime;     // S replaced by adjacency to an existential z, prefix E1eaa
  Formula psi_dblprime;  // S replaced by self-loops, guarded by x != y, prefix E1aa
};

UnreachFormulas build_unreach_formulas();

/// psi_dblprime without the x != y guard. Unsatisfiable on every graph
/// with a self-loop; kept for tests.
Formula build_psi_dblprime_unguarded();

}  // namespace eso
