#include "eso/prefix.hpp"

#include "eso/error.hpp"
#include "text_util.hpp"

namespace eso {

bool PrefixType::well_formed() const {
  bool seen_first_order = false;
  for (const Token& t : tokens) {
    if (t.kind == Token::Kind::SecondOrder) {
      if (seen_first_order || t.arity < 1) return false;
    } else {
      seen_first_order = true;
    }
  }
  return true;
}

PrefixType parse_prefix(std::string_view text) {
  PrefixType p;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (detail::is_space(c)) {
      ++i;
      continue;
    }
    if (c == 'a') {
      p.tokens.push_back(Token::forall());
      ++i;
    } else if (c == 'e') {
      p.tokens.push_back(Token::exists());
      ++i;
    } else if (c == 'E') {
      std::size_t start = i++;
      int arity = 0;
      if (!detail::read_arity(text, i, arity)) {
        throw ParseError("second-order quantifier needs an arity (E1, E2, ...)", start);
      }
      if (arity < 1) throw ParseError("arity must be positive", start);
      p.tokens.push_back(Token::so(arity));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in prefix", i);
    }
  }
  if (!p.well_formed()) {
    throw ValidationError("second-order quantifier after first-order quantifier in prefix '" +
                          std::string(text) + "'");
  }
  return p;
}

std::string to_string(const PrefixType& p) {
  std::string out;
  for (const Token& t : p.tokens) {
    switch (t.kind) {
      case Token::Kind::SecondOrder:
        out += 'E';
        out += std::to_string(t.arity);
        break;
      case Token::Kind::Forall:
        out += 'a';
        break;
      case Token::Kind::Exists:
        out += 'e';
        break;
    }
  }
  return out;
}

}  // namespace eso
