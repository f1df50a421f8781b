#include "eso/classify.hpp"

#include <set>

#include "eso/error.hpp"
#include "text_util.hpp"

namespace eso {

std::string to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::FO: return "FO";
    case ComplexityClass::L: return "L";
    case ComplexityClass::NL: return "NL";
    case ComplexityClass::NP: return "NP";
  }
  return "NP";
}

ComplexityClass parse_complexity_class(std::string_view text) {
  if (text == "FO") return ComplexityClass::FO;
  if (text == "L") return ComplexityClass::L;
  if (text == "NL") return ComplexityClass::NL;
  if (text == "NP") return ComplexityClass::NP;
  throw ValidationError("unknown complexity class '" + std::string(text) + "'");
}

PrefixPattern PrefixPattern::parse(std::string_view text) {
  std::vector<Element> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (detail::is_space(c)) {
      ++i;
      continue;
    }
    Element el;
    if (c == 'a' || c == 'e') {
      el.atom = c == 'a' ? Atom::Forall : Atom::Exists;
      ++i;
    } else if (c == 'E') {
      ++i;
      int arity = 0;
      if (detail::read_arity(text, i, arity)) {
        if (arity < 1) throw ParseError("arity must be positive", i);
        el.atom = Atom::SoFixed;
        el.arity = arity;
      } else {
        el.atom = Atom::SoAny;
      }
    } else if (text.substr(i, 4) == "(ae)") {
      el.atom = Atom::ForallExists;
      i += 4;
    } else if (c == '*') {
      throw ParseError("'*' must follow a token or (ae)", i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in pattern", i);
    }
    while (i < text.size() && detail::is_space(text[i])) ++i;
    if (i < text.size() && text[i] == '*') {
      el.star = true;
      ++i;
    }
    out.push_back(el);
  }
  return PrefixPattern(std::move(out));
}

std::string to_string(const PrefixPattern& p) {
  std::string out;
  for (const auto& el : p.elements()) {
    switch (el.atom) {
      case PrefixPattern::Atom::SoFixed: out += "E" + std::to_string(el.arity); break;
      case PrefixPattern::Atom::SoAny: out += "E"; break;
      case PrefixPattern::Atom::Forall: out += "a"; break;
      case PrefixPattern::Atom::Exists: out += "e"; break;
      case PrefixPattern::Atom::ForallExists: out += "(ae)"; break;
    }
    if (el.star) out += "*";
  }
  return out;
}

namespace {

using Atom = PrefixPattern::Atom;

bool single_matches(const PrefixPattern::Element& el, const Token& t) {
  switch (el.atom) {
    case Atom::SoFixed: return t.kind == Token::Kind::SecondOrder && t.arity <= el.arity;
    case Atom::SoAny: return t.kind == Token::Kind::SecondOrder;
    case Atom::Forall: return t.kind == Token::Kind::Forall;
    case Atom::Exists: return t.kind == Token::Kind::Exists;
    case Atom::ForallExists: return false;
  }
  return false;
}

// NFA states: 2*i is "before element i", 2*i+1 is the middle of an (ae)
// group at element i. Every element may be skipped (token deletion).
class CoverNfa {
 public:
  explicit CoverNfa(const PrefixPattern& p) : els_(p.elements()) {}

  bool accepts(const PrefixType& w) const {
    std::set<int> cur = closure({0});
    for (const Token& t : w.tokens) {
      std::set<int> next;
      for (int s : cur) step(s, t, next);
      cur = closure(next);
      if (cur.empty()) return false;
    }
    return cur.count(final_state()) > 0;
  }

 private:
  int final_state() const { return 2 * static_cast<int>(els_.size()); }

  // State reached after finishing element i.
  int after(std::size_t i) const { return els_[i].star ? 2 * static_cast<int>(i) : 2 * static_cast<int>(i) + 2; }

  std::set<int> closure(std::set<int> states) const {
    std::vector<int> todo(states.begin(), states.end());
    auto add = [&](int s) {
      if (states.insert(s).second) todo.push_back(s);
    };
    while (!todo.empty()) {
      int s = todo.back();
      todo.pop_back();
      if (s == final_state()) continue;
      std::size_t i = static_cast<std::size_t>(s / 2);
      if (s % 2 == 0) {
        add(2 * static_cast<int>(i) + 2);  // skip element i entirely
        if (els_[i].atom == Atom::ForallExists) add(s + 1);  // drop the a
      } else {
        add(after(i));  // drop the e
      }
    }
    return states;
  }

  void step(int s, const Token& t, std::set<int>& next) const {
    if (s == final_state()) return;
    std::size_t i = static_cast<std::size_t>(s / 2);
    const auto& el = els_[i];
    if (s % 2 == 1) {
      if (t.kind == Token::Kind::Exists) next.insert(after(i));
      return;
    }
    if (el.atom == Atom::ForallExists) {
      if (t.kind == Token::Kind::Forall) next.insert(s + 1);
      return;
    }
    if (single_matches(el, t)) next.insert(after(i));
  }

  std::vector<PrefixPattern::Element> els_;
};

std::vector<PrefixPattern> patterns(std::initializer_list<const char*> texts) {
  std::vector<PrefixPattern> out;
  for (const char* t : texts) out.push_back(PrefixPattern::parse(t));
  return out;
}

std::vector<TableRow> basic_table() {
  return {
      {ComplexityClass::FO, patterns({"(ae)*", "E*e*a", "E1ae"}), {}},
      {ComplexityClass::L, patterns({"E*ae"}), patterns({"E1E1ae", "E2ae"})},
      {ComplexityClass::L, patterns({"Eaa"}), patterns({"E1aa"})},
      {ComplexityClass::NL, patterns({"E1e*aa"}), patterns({"E1eaa"})},
      {ComplexityClass::NP, patterns({"E*(ae)*"}),
       patterns({"E1aaa", "E1E1aa", "E2eaa", "E1eae", "E1aee", "E1aea", "E1aae"})},
  };
}

std::vector<TableRow> general_table() {
  return {
      {ComplexityClass::FO, patterns({"(ae)*", "E*e*a"}), {}},
      {ComplexityClass::NL, patterns({"E1e*aa", "Eaa"}), patterns({"E1aa"})},
      {ComplexityClass::NP, patterns({"E*(ae)*"}), patterns({"E1aaa", "E1E1aa", "E2eaa", "E1ae"})},
  };
}

}  // namespace

bool covered_by(const PrefixType& w, const PrefixPattern& pat) {
  if (!w.well_formed()) throw ValidationError("prefix '" + to_string(w) + "' is not well formed");
  return CoverNfa(pat).accepts(w);
}

const std::vector<TableRow>& dichotomy_table(GraphMode mode) {
  static const std::vector<TableRow> basic = basic_table();
  static const std::vector<TableRow> general = general_table();
  return mode == GraphMode::Basic ? basic : general;
}

Classification classify(const PrefixType& w, GraphMode mode) {
  if (!w.well_formed()) throw ValidationError("prefix '" + to_string(w) + "' is not well formed");
  const auto& table = dichotomy_table(mode);
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (const auto& pat : table[r].at_most) {
      if (covered_by(w, pat)) return {table[r].klass, pat, static_cast<int>(r)};
    }
  }
  throw std::logic_error("catch-all row did not cover " + to_string(w));
}

bool subsumed_by(const PrefixType& w, const PrefixType& v) {
  std::size_t j = 0;
  for (const Token& t : v.tokens) {
    if (j == w.tokens.size()) break;
    const Token& want = w.tokens[j];
    bool match = want.kind == t.kind &&
                 (t.kind != Token::Kind::SecondOrder || want.arity <= t.arity);
    if (match) ++j;
  }
  return j == w.tokens.size();
}

}  // namespace eso
