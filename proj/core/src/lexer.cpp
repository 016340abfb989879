#include <cctype>

#include "urset/dsl.hpp"

namespace urset::dsl {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_keyword(std::string_view word) {
  return word == "let" || word == "in" || word == "subset" || word == "omega";
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = input.size();
  while (i < n) {
    char c = input[i];
    if (c == '#') break;  // comment to end of line
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < n && ident_char(input[i])) ++i;
      std::string word(input.substr(start, i - start));
      out.push_back({is_keyword(word) ? TokenKind::keyword : TokenKind::identifier,
                     std::move(word), {start, i}});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < n && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      if (i - start > 19)
        throw lex_error({start, i}, "integer literal is too large");
      out.push_back({TokenKind::integer, std::string(input.substr(start, i - start)), {start, i}});
      continue;
    }
    if (c == '-' && i + 1 < n && input[i + 1] == '>') {
      out.push_back({TokenKind::symbol, "->", {start, start + 2}});
      i += 2;
      continue;
    }
    switch (c) {
      case '{': case '}': case '(': case ')': case ',':
      case '+': case '*': case '=': case '<':
        out.push_back({TokenKind::symbol, std::string(1, c), {start, start + 1}});
        ++i;
        continue;
      default: {
        std::string shown(1, c);
        if (static_cast<unsigned char>(c) >= 0x80) {  // show raw bytes as hex
          static const char* hex = "0123456789abcdef";
          unsigned char b = static_cast<unsigned char>(c);
          shown = {'\\', 'x', hex[b >> 4], hex[b & 0xf]};
        }
        throw lex_error({start, start + 1}, "unexpected character '" + shown + "'");
      }
    }
  }
  out.push_back({TokenKind::end, "", {n, n}});
  return out;
}

}  // namespace urset::dsl
