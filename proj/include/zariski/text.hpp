#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/errors.hpp"

namespace zariski::detail {

inline std::string_view strip(std::string_view v) {
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!v.empty() && blank(v.front())) v.remove_prefix(1);
  while (!v.empty() && blank(v.back())) v.remove_suffix(1);
  return v;
}

/// Whitespace-splits a literal, keeping parenthesized and braced groups
/// (semidirect pairs, swap sets) intact.
inline std::vector<std::string_view> split_factors(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    int depth = 0;
    while (i < text.size() && (depth > 0 || (text[i] != ' ' && text[i] != '\t'))) {
      if (text[i] == '(' || text[i] == '{' || text[i] == '[') ++depth;
      if (text[i] == ')' || text[i] == '}' || text[i] == ']') --depth;
      ++i;
    }
    if (depth != 0) throw parse_error("unbalanced brackets in literal");
    out.push_back(text.substr(start, i - start));
  }
  return out;
}

inline std::int64_t parse_int(std::string_view v) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw parse_error("expected an integer, got \"" + std::string(v) + "\"");
  return value;
}

inline std::uint64_t parse_nat(std::string_view v) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw parse_error("expected a natural number, got \"" + std::string(v) + "\"");
  return value;
}

/// Splits one term "name" or "name^int" into its parts.
inline std::pair<std::string_view, std::int64_t> split_term(std::string_view term) {
  std::size_t caret = term.rfind('^');
  // '^' inside brackets never happens in the grammar; rfind is safe because
  // exponents are trailing
  if (caret == std::string_view::npos) return {term, 1};
  return {term.substr(0, caret), parse_int(term.substr(caret + 1))};
}

}  // namespace zariski::detail
