#pragma once

#include <cctype>
#include <cstddef>
#include <string_view>

namespace eso::detail {

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Reads an arity written as ASCII digits ("E12"), an underscore form
// ("E_2"), or Unicode subscript digits ("E₂"). Returns false and leaves
// `pos` untouched when no digits follow.
inline bool read_arity(std::string_view s, std::size_t& pos, int& out) {
  std::size_t i = pos;
  if (i < s.size() && s[i] == '_') ++i;
  int value = 0;
  bool any = false;
  while (i < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      value = value * 10 + (s[i] - '0');
      ++i;
      any = true;
    } else if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
               static_cast<unsigned char>(s[i + 1]) == 0x82 &&
               static_cast<unsigned char>(s[i + 2]) >= 0x80 &&
               static_cast<unsigned char>(s[i + 2]) <= 0x89) {
      value = value * 10 + (static_cast<unsigned char>(s[i + 2]) - 0x80);
      i += 3;
      any = true;
    } else {
      break;
    }
    if (value > 1000000) return false;
  }
  if (!any) return false;
  pos = i;
  out = value;
  return true;
}

}  // namespace eso::detail
