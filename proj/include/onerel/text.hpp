#ifndef ONEREL_TEXT_HPP
#define ONEREL_TEXT_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "onerel/word.hpp"

namespace onerel {

// Syntax error with the byte offset of the offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}

  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Word grammar: tokens a, b, A (= a^-1), B (= b^-1), each with an optional
// ^<int> exponent (negative allowed); whitespace ignored.
inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Gen gen;
    bool neg = false;
    switch (c) {
      case 'a': gen = Gen::A; break;
      case 'A': gen = Gen::A; neg = true; break;
      case 'b': gen = Gen::B; break;
      case 'B': gen = Gen::B; neg = true; break;
      case '1': ++i; continue;  // identity token, round-trips the empty word
      default:
        throw parse_error("syntax error at offset " + std::to_string(i) +
                              ": expected one of a, b, A, B",
                          i);
    }
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      bool exp_neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        exp_neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("syntax error at offset " + std::to_string(caret) +
                              ": expected integer exponent after '^'",
                          caret);
      exp = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1'000'000)
          throw parse_error("syntax error at offset " + std::to_string(caret) +
                                ": exponent out of range",
                            caret);
        ++i;
      }
      if (exp_neg) exp = -exp;
    }
    if (neg) exp = -exp;
    w.push(gen, exp);
  }
  return w;
}

// Canonical output: positive runs in lowercase, negative runs in uppercase,
// magnitude as ^k for k > 1.  Example: a b^2 A^3.
inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    const bool neg = s.exp < 0;
    const long long mag = neg ? -s.exp : s.exp;
    char letter = s.gen == Gen::A ? 'a' : 'b';
    if (neg) letter = static_cast<char>(std::toupper(letter));
    out += letter;
    if (mag > 1) {
      out += '^';
      out += std::to_string(mag);
    }
  }
  return out;
}

}  // namespace onerel

#endif  // ONEREL_TEXT_HPP
