#include "eso/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "eso/error.hpp"
#include "text_util.hpp"

namespace eso {

// ---------------------------------------------------------------------------
// Expr factories

bool Expr::is_atom() const {
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::Edge:
    case Op::Mark:
    case Op::Rel:
    case Op::Eq:
      return true;
    default:
      return false;
  }
}

Expr Expr::truth(bool value) { return Expr{value ? Op::True : Op::False, {}, {}, {}}; }

Expr Expr::edge(std::string x, std::string y) {
  return Expr{Op::Edge, "E", {std::move(x), std::move(y)}, {}};
}

Expr Expr::mark(std::string x) { return Expr{Op::Mark, "S", {std::move(x)}, {}}; }

Expr Expr::rel(std::string name, std::vector<std::string> args) {
  return Expr{Op::Rel, std::move(name), std::move(args), {}};
}

Expr Expr::eq(std::string x, std::string y) {
  return Expr{Op::Eq, {}, {std::move(x), std::move(y)}, {}};
}

Expr Expr::neq(std::string x, std::string y) { return neg(eq(std::move(x), std::move(y))); }

Expr Expr::neg(Expr e) { return Expr{Op::Not, {}, {}, {std::move(e)}}; }

Expr Expr::conj(std::vector<Expr> parts) {
  if (parts.empty()) return truth(true);
  if (parts.size() == 1) return std::move(parts.front());
  return Expr{Op::And, {}, {}, std::move(parts)};
}

Expr Expr::disj(std::vector<Expr> parts) {
  if (parts.empty()) return truth(false);
  if (parts.size() == 1) return std::move(parts.front());
  return Expr{Op::Or, {}, {}, std::move(parts)};
}

Expr Expr::implies(Expr lhs, Expr rhs) {
  return Expr{Op::Implies, {}, {}, {std::move(lhs), std::move(rhs)}};
}

Expr Expr::iff(Expr lhs, Expr rhs) {
  return Expr{Op::Iff, {}, {}, {std::move(lhs), std::move(rhs)}};
}

const SoQuantifier* Formula::find_relation(std::string_view name) const {
  for (const auto& q : so) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

bool mentions_mark(const Expr& e) {
  if (e.op == Op::Mark) return true;
  return std::any_of(e.kids.begin(), e.kids.end(), mentions_mark);
}

bool Formula::uses_mark() const { return mentions_mark(matrix); }

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Int, Colon, Dot, LParen, RParen, Comma, Tilde, Amp, Bar, Arrow, DArrow,
                 Equal, NotEqual, End };

struct Lexeme {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Lexeme> lex(std::string_view s) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (detail::is_space(c)) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto two = s.substr(i, 2);
    auto three = s.substr(i, 3);
    if (three == "<->") {
      out.push_back({Tok::DArrow, "<->", start});
      i += 3;
    } else if (two == "->") {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
    } else if (two == "!=") {
      out.push_back({Tok::NotEqual, "!=", start});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case ':': kind = Tok::Colon; break;
        case '.': kind = Tok::Dot; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case '~': kind = Tok::Tilde; break;
        case '&': kind = Tok::Amp; break;
        case '|': kind = Tok::Bar; break;
        case '=': kind = Tok::Equal; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({kind, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula parse() {
    Formula f;
    parse_prefix(f);
    f.matrix = parse_iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "' after formula");
    return f;
  }

 private:
  const Lexeme& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  const Lexeme& next() { return toks_[std::min(i_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  const Lexeme& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  void parse_prefix(Formula& f) {
    while (!accept(Tok::Dot)) {
      const Lexeme& head = peek();
      if (head.kind != Tok::Ident) fail("expected quantifier or '.'");
      std::size_t pos = head.pos;
      std::string word = head.text;
      ++i_;
      if (word == "a" || word == "e") {
        expect(Tok::Colon, "':' after quantifier");
        std::string var = expect(Tok::Ident, "variable name").text;
        f.fo.push_back({word == "a" ? Quantifier::Forall : Quantifier::Exists, std::move(var)});
        continue;
      }
      int arity = 0;
      if (word == "E" && peek().kind == Tok::Int) {
        arity = std::stoi(next().text);
      } else if (word.size() > 1 && word[0] == 'E') {
        std::size_t at = 1;
        if (!detail::read_arity(word, at, arity) || at != word.size()) {
          throw ParseError("expected quantifier, got '" + word + "'", pos);
        }
      } else {
        throw ParseError("expected quantifier, got '" + word + "'", pos);
      }
      expect(Tok::Colon, "':' after quantifier");
      std::string name = expect(Tok::Ident, "relation name").text;
      if (!f.fo.empty()) {
        throw ValidationError("second-order quantifier '" + name +
                              "' after first-order quantifier (formula must be prenex ESO)");
      }
      f.so.push_back({std::move(name), arity});
    }
  }

  Expr parse_iff() {
    Expr lhs = parse_imp();
    while (accept(Tok::DArrow)) lhs = Expr::iff(std::move(lhs), parse_imp());
    return lhs;
  }

  Expr parse_imp() {
    Expr lhs = parse_or();
    if (accept(Tok::Arrow)) return Expr::implies(std::move(lhs), parse_imp());
    return lhs;
  }

  Expr parse_or() {
    std::vector<Expr> parts{parse_and()};
    while (accept(Tok::Bar)) parts.push_back(parse_and());
    return parts.size() == 1 ? std::move(parts.front()) : Expr{Op::Or, {}, {}, std::move(parts)};
  }

  Expr parse_and() {
    std::vector<Expr> parts{parse_lit()};
    while (accept(Tok::Amp)) parts.push_back(parse_lit());
    return parts.size() == 1 ? std::move(parts.front()) : Expr{Op::And, {}, {}, std::move(parts)};
  }

  Expr parse_lit() {
    if (accept(Tok::Tilde)) return Expr::neg(parse_lit());
    return parse_atom();
  }

  Expr parse_atom() {
    if (accept(Tok::LParen)) {
      Expr inner = parse_iff();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Lexeme& head = peek();
    if (head.kind != Tok::Ident) fail("expected atom");
    std::string word = head.text;
    std::size_t pos = head.pos;
    ++i_;
    if (word == "true") return Expr::truth(true);
    if (word == "false") return Expr::truth(false);
    if (accept(Tok::Equal)) return Expr::eq(word, expect(Tok::Ident, "variable").text);
    if (accept(Tok::NotEqual)) return Expr::neq(word, expect(Tok::Ident, "variable").text);
    if (!accept(Tok::LParen)) {
      throw ParseError("expected '(', '=' or '!=' after '" + word + "'", peek().pos);
    }
    std::vector<std::string> args{expect(Tok::Ident, "variable").text};
    while (accept(Tok::Comma)) args.push_back(expect(Tok::Ident, "variable").text);
    expect(Tok::RParen, "')'");
    if (word == "E") {
      if (args.size() != 2) throw ValidationError("E expects 2 arguments at position " +
                                                  std::to_string(pos));
      return Expr::edge(args[0], args[1]);
    }
    if (word == "S") {
      if (args.size() != 1) throw ValidationError("S expects 1 argument at position " +
                                                  std::to_string(pos));
      return Expr::mark(args[0]);
    }
    return Expr::rel(std::move(word), std::move(args));
  }

  std::vector<Lexeme> toks_;
  std::size_t i_ = 0;
};

void validate_expr(const Expr& e, const Formula& f, const std::set<std::string>& vars) {
  for (const auto& v : e.args) {
    if (!vars.count(v)) throw ValidationError("unbound variable '" + v + "'");
  }
  switch (e.op) {
    case Op::Rel: {
      const SoQuantifier* q = f.find_relation(e.name);
      if (q == nullptr) throw ValidationError("undeclared relation '" + e.name + "'");
      if (static_cast<int>(e.args.size()) != q->arity) {
        throw ValidationError("relation '" + e.name + "' declared with arity " +
                              std::to_string(q->arity) + " but used with " +
                              std::to_string(e.args.size()) + " argument(s)");
      }
      break;
    }
    case Op::Edge:
    case Op::Eq:
      if (e.args.size() != 2) throw ValidationError("binary atom with wrong argument count");
      break;
    case Op::Mark:
      if (e.args.size() != 1) throw ValidationError("S expects 1 argument");
      break;
    case Op::Not:
      if (e.kids.size() != 1) throw ValidationError("negation needs one operand");
      break;
    case Op::Implies:
    case Op::Iff:
      if (e.kids.size() != 2) throw ValidationError("binary connective needs two operands");
      break;
    case Op::And:
    case Op::Or:
      if (e.kids.size() < 2) throw ValidationError("n-ary connective needs two operands");
      break;
    default:
      break;
  }
  for (const auto& k : e.kids) validate_expr(k, f, vars);
}

// ---------------------------------------------------------------------------
// Printer

int precedence(const Expr& e) {
  switch (e.op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Not: return e.kids.front().op == Op::Eq ? 6 : 5;
    default: return 6;
  }
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i];
  }
  return out;
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, int parent_prec, std::string& out) {
  if (precedence(child) <= parent_prec) {
    out += '(';
    print(child, out);
    out += ')';
  } else {
    print(child, out);
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.op) {
    case Op::True: out += "true"; return;
    case Op::False: out += "false"; return;
    case Op::Edge:
    case Op::Mark:
    case Op::Rel:
      out += e.name + "(" + join_args(e.args) + ")";
      return;
    case Op::Eq:
      out += e.args[0] + " = " + e.args[1];
      return;
    case Op::Not: {
      const Expr& k = e.kids.front();
      if (k.op == Op::Eq) {
        out += k.args[0] + " != " + k.args[1];
        return;
      }
      out += '~';
      // ~ binds to an atom only; negated connectives and nested negations
      // need parentheses to re-parse identically.
      print_child(k, 5, out);
      return;
    }
    case Op::And:
    case Op::Or: {
      const char* sep = e.op == Op::And ? " & " : " | ";
      int p = precedence(e);
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) out += sep;
        print_child(e.kids[i], p, out);
      }
      return;
    }
    case Op::Implies:
    case Op::Iff: {
      const char* sep = e.op == Op::Implies ? " -> " : " <-> ";
      int p = precedence(e);
      print_child(e.kids[0], p, out);
      out += sep;
      print_child(e.kids[1], p, out);
      return;
    }
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const FormulaOptions& options) {
  Formula f = Parser(text).parse();
  validate(f, options);
  return f;
}

void validate(const Formula& f, const FormulaOptions& options) {
  std::set<std::string> names;
  for (const auto& q : f.so) {
    if (q.name == "E" || q.name == "S") {
      throw ValidationError("'" + q.name + "' is reserved for the input vocabulary");
    }
    if (q.arity < 1) throw ValidationError("relation '" + q.name + "' needs a positive arity");
    if (q.arity > options.max_so_arity) {
      throw ValidationError("relation '" + q.name + "' has arity " + std::to_string(q.arity) +
                            ", above the cap of " + std::to_string(options.max_so_arity));
    }
    if (!names.insert(q.name).second) {
      throw ValidationError("relation '" + q.name + "' quantified twice");
    }
  }
  std::set<std::string> vars;
  for (const auto& q : f.fo) {
    if (!vars.insert(q.var).second) {
      throw ValidationError("variable '" + q.var + "' quantified twice");
    }
  }
  validate_expr(f.matrix, f, vars);
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  for (const auto& q : f.so) out += "E" + std::to_string(q.arity) + ":" + q.name + " ";
  for (const auto& q : f.fo) out += std::string(q.kind == Quantifier::Forall ? "a" : "e") + ":" + q.var + " ";
  out += ". ";
  out += to_string(f.matrix);
  return out;
}

PrefixType prefix_type(const Formula& f) {
  PrefixType p;
  for (const auto& q : f.so) p.tokens.push_back(Token::so(q.arity));
  for (const auto& q : f.fo) {
    p.tokens.push_back(q.kind == Quantifier::Forall ? Token::forall() : Token::exists());
  }
  return p;
}

bool evaluate(const Expr& e, const std::function<bool(const Expr&)>& atom) {
  switch (e.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Not: return !evaluate(e.kids.front(), atom);
    case Op::And:
      for (const auto& k : e.kids) {
        if (!evaluate(k, atom)) return false;
      }
      return true;
    case Op::Or:
      for (const auto& k : e.kids) {
        if (evaluate(k, atom)) return true;
      }
      return false;
    case Op::Implies: return !evaluate(e.kids[0], atom) || evaluate(e.kids[1], atom);
    case Op::Iff: return evaluate(e.kids[0], atom) == evaluate(e.kids[1], atom);
    default: return atom(e);
  }
}

Expr map_atoms(const Expr& e, const std::function<std::optional<Expr>(const Expr&)>& replace) {
  if (e.is_atom()) {
    if (auto r = replace(e)) return *r;
    return e;
  }
  Expr out{e.op, e.name, e.args, {}};
  out.kids.reserve(e.kids.size());
  for (const auto& k : e.kids) out.kids.push_back(map_atoms(k, replace));
  return out;
}

Expr rename_vars(const Expr& e, const std::map<std::string, std::string>& renaming) {
  Expr out{e.op, e.name, e.args, {}};
  for (auto& a : out.args) {
    if (auto it = renaming.find(a); it != renaming.end()) a = it->second;
  }
  out.kids.reserve(e.kids.size());
  for (const auto& k : e.kids) out.kids.push_back(rename_vars(k, renaming));
  return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

Formula forall_exists(std::vector<SoQuantifier> so, Expr matrix) {
  return Formula{std::move(so),
                 {{Quantifier::Forall, "x"}, {Quantifier::Exists, "y"}},
                 std::move(matrix)};
}

}  // namespace

Formula build_phi_m(int m) {
  if (m < 2) throw PreconditionError("phi_m needs m >= 2");
  auto colour = [](int i) { return "C" + std::to_string(i); };
  std::vector<SoQuantifier> so;
  for (int i = 1; i <= m; ++i) so.push_back({colour(i), 1});
  std::vector<Expr> options;
  for (int i = 1; i <= m; ++i) {
    std::vector<Expr> parts{Expr::rel(colour(i), {"x"}), Expr::rel(colour(i % m + 1), {"y"})};
    for (int j = 1; j <= m; ++j) {
      if (j != i) parts.push_back(Expr::neg(Expr::rel(colour(j), {"x"})));
    }
    options.push_back(Expr::conj(std::move(parts)));
  }
  return forall_exists(std::move(so),
                       Expr::conj({Expr::edge("x", "y"), Expr::disj(std::move(options))}));
}

Formula build_phi3_two_predicates() {
  auto code = [](int colour, const std::string& v) {
    bool first = colour == 0 || colour == 1;
    bool second = colour == 0 || colour == 2;
    Expr c1 = Expr::rel("C1", {v});
    Expr c2 = Expr::rel("C2", {v});
    return Expr::conj({first ? c1 : Expr::neg(c1), second ? c2 : Expr::neg(c2)});
  };
  std::vector<Expr> options;
  for (int i = 0; i < 3; ++i) options.push_back(Expr::conj({code(i, "x"), code((i + 1) % 3, "y")}));
  return forall_exists({{"C1", 1}, {"C2", 1}},
                       Expr::conj({Expr::edge("x", "y"), Expr::disj(std::move(options))}));
}

Formula build_phi_A2() {
  Expr matrix = Expr::conj({
      Expr::edge("x", "y"),
      Expr::rel("F", {"x", "y"}),
      Expr::neg(Expr::rel("F", {"y", "x"})),
      Expr::iff(Expr::rel("F", {"x", "x"}), Expr::neg(Expr::rel("F", {"y", "y"}))),
  });
  return forall_exists({{"F", 2}}, std::move(matrix));
}

UnreachFormulas build_unreach_formulas() {
  auto body = [](const std::function<Expr(const std::string&)>& shadow) {
    Expr xor_m = Expr::iff(Expr::rel("M", {"x"}), Expr::neg(Expr::rel("M", {"y"})));
    return Expr::conj({
        Expr::implies(Expr::conj({shadow("x"), shadow("y")}), xor_m),
        Expr::implies(Expr::conj({Expr::neg(shadow("x")), Expr::neg(shadow("y"))}), xor_m),
        Expr::implies(Expr::conj({Expr::neg(shadow("x")), shadow("y")}),
                      Expr::implies(Expr::rel("M", {"x"}), Expr::rel("M", {"y"}))),
    });
  };
  const std::vector<FoQuantifier> xy{{Quantifier::Forall, "x"}, {Quantifier::Forall, "y"}};

  UnreachFormulas out;
  out.phi_shadow = Formula{{{"M", 1}}, xy,
                           Expr::implies(Expr::edge("x", "y"),
                                         body([](const std::string& v) { return Expr::mark(v); }))};

  Expr guard = Expr::conj({Expr::edge("x", "y"), Expr::neq("x", "z"), Expr::neq("y", "z")});
  out.psi_prime = Formula{
      {{"M", 1}},
      {{Quantifier::Exists, "z"}, {Quantifier::Forall, "x"}, {Quantifier::Forall, "y"}},
      Expr::implies(std::move(guard),
                    body([](const std::string& v) { return Expr::edge(v, "z"); }))};

  // With loops present E(x,y) also holds for x = y, where the first
  // conjunct would demand M(x) <-> ~M(x); the x != y guard skips it.
  out.psi_dblprime = Formula{
      {{"M", 1}}, xy,
      Expr::implies(Expr::conj({Expr::edge("x", "y"), Expr::neq("x", "y")}),
                    body([](const std::string& v) { return Expr::edge(v, v); }))};
  return out;
}

Formula build_psi_dblprime_unguarded() {
  Formula f = build_unreach_formulas().psi_dblprime;
  f.matrix.kids[0] = Expr::edge("x", "y");
  return f;
}

}  // namespace eso
