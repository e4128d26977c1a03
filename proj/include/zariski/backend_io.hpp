#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zariski/abelian.hpp"
#include "zariski/errors.hpp"
#include "zariski/free_group.hpp"
#include "zariski/monomial.hpp"
#include "zariski/text.hpp"
#include "zariski/tree_groups.hpp"

namespace zariski {

using AnyBackend = std::variant<FreeGroup, AbelianGroup, TreeSdGroup>;

/// Parses a backend descriptor: "free:<rank>" | "free:w" |
/// "abelian:[m0,m1,...]" | "abelian:<count>" (that many infinite cyclic
/// summands) | "abelian:w" | "tree-sd".
inline AnyBackend parse_backend(std::string_view text) {
  text = detail::strip(text);
  if (text == "tree-sd") return TreeSdGroup{};
  if (text.starts_with("free:")) {
    std::string_view arg = text.substr(5);
    if (arg == "w") return FreeGroup::infinite_rank();
    return FreeGroup(detail::parse_nat(arg));
  }
  if (text.starts_with("abelian:")) {
    std::string_view arg = text.substr(8);
    if (arg == "w") return AbelianGroup::infinite_rank();
    if (arg.starts_with("[") && arg.ends_with("]")) {
      std::vector<std::uint64_t> moduli;
      std::string_view body = arg.substr(1, arg.size() - 2);
      while (!body.empty()) {
        std::size_t comma = body.find(',');
        moduli.push_back(detail::parse_nat(detail::strip(
            comma == std::string_view::npos ? body : body.substr(0, comma))));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
      }
      return AbelianGroup(std::move(moduli));
    }
    return AbelianGroup::free_abelian(detail::parse_nat(arg));
  }
  throw parse_error("unknown backend descriptor \"" + std::string(text) + "\"");
}

inline std::string backend_descriptor(const AnyBackend& b) {
  return std::visit([](const auto& g) { return g.descriptor(); }, b);
}

/// A witness-family file: a "backend: <descriptor>" header line followed by
/// one monomial literal per line. Blank lines and lines starting with '#'
/// are skipped.
struct FamilyFile {
  AnyBackend backend;
  std::vector<std::string> monomial_lines;
};

inline FamilyFile parse_family_text(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::strip(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.emplace_back(line);
    start = end + 1;
  }
  if (lines.empty() || !lines.front().starts_with("backend:"))
    throw parse_error("family file: first line must be \"backend: <descriptor>\"");
  FamilyFile out{parse_backend(std::string_view(lines.front()).substr(8)), {}};
  out.monomial_lines.assign(lines.begin() + 1, lines.end());
  return out;
}

inline FamilyFile load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open family file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_family_text(ss.str());
}

template <GroupBackend G>
WitnessFamily<G> family_from_lines(const G& backend, const std::vector<std::string>& lines) {
  std::vector<Monomial<G>> ms;
  ms.reserve(lines.size());
  for (const std::string& line : lines) ms.push_back(parse_monomial(backend, line));
  return WitnessFamily<G>::over(backend, std::move(ms));
}

/// A set file: one element literal per line, the backend supplied by the
/// caller. Blank lines and '#' comments are skipped.
template <GroupBackend G>
std::vector<typename G::element_type> load_set_file(const G& backend, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open set file " + path);
  std::vector<typename G::element_type> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = detail::strip(line);
    if (v.empty() || v.front() == '#') continue;
    out.push_back(backend.parse_element(v));
  }
  return out;
}

/// Inline comma-separated element list, e.g. "g0, g0 g1^-1, 1".
template <GroupBackend G>
std::vector<typename G::element_type> parse_element_list(const G& backend, std::string_view text) {
  std::vector<typename G::element_type> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && (text[i] == '(' || text[i] == '{' || text[i] == '[')) ++depth;
    if (i < text.size() && (text[i] == ')' || text[i] == '}' || text[i] == ']')) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view item = detail::strip(text.substr(start, i - start));
      if (!item.empty()) out.push_back(backend.parse_element(item));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace zariski
