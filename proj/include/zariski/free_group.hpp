#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "zariski/enumeration.hpp"
#include "zariski/errors.hpp"
#include "zariski/text.hpp"
#include "zariski/word.hpp"

namespace zariski {

/// A free group of finite rank r (generators g0..g{r-1}) or countably
/// infinite rank (generators g0, g1, ... materialized lazily by index).
class FreeGroup {
 public:
  using element_type = Word;
  using enumerator_type = WordEnumerator;

  explicit FreeGroup(std::uint64_t rank) : rank_(rank) {
    if (rank == 0) throw precondition_error("free backend: rank must be >= 1");
  }

  static FreeGroup infinite_rank() { return FreeGroup(infinite_tag{}); }

  bool has_infinite_rank() const { return !rank_.has_value(); }
  std::optional<std::uint64_t> rank() const { return rank_; }

  Word identity() const { return {}; }
  Word gen(std::uint64_t index) const {
    check_gen(index);
    return Word::from_reduced({{index, 1}});
  }

  void validate(const Word& w) const {
    if (rank_ && !w.is_identity() && w.max_gen() >= *rank_)
      throw backend_mismatch("free backend: element uses out-of-range generator");
  }

  Word mul(const Word& u, const Word& v) const {
    validate(u);
    validate(v);
    return zariski::mul(u, v);
  }

  Word inv(const Word& u) const {
    validate(u);
    return zariski::inv(u);
  }

  bool eq(const Word& u, const Word& v) const { return u == v; }
  bool is_identity(const Word& u) const { return u.is_identity(); }

  WordEnumerator enumerator() const {
    StagePolicy p;
    if (rank_) {
      p.kind = StagePolicy::Kind::finite_rank;
      p.rank = *rank_;
    } else {
      p.kind = StagePolicy::Kind::infinite_rank;
    }
    return WordEnumerator(p);
  }

  std::string format_element(const Word& w) const {
    if (w.is_identity()) return "1";
    std::string s;
    for (const Letter& l : w.runs()) {
      if (!s.empty()) s += ' ';
      s += 'g';
      s += std::to_string(l.gen);
      if (l.exp != 1) {
        s += '^';
        s += std::to_string(l.exp);
      }
    }
    return s;
  }

  Word parse_element(std::string_view text) const {
    std::vector<Letter> raw;
    for (std::string_view tok : detail::split_factors(text)) {
      if (tok == "1") continue;
      auto [name, exp] = detail::split_term(tok);
      if (name.size() < 2 || name[0] != 'g')
        throw parse_error("free backend: unknown generator \"" + std::string(tok) + "\"");
      std::uint64_t index = detail::parse_nat(name.substr(1));
      check_gen(index);
      raw.push_back({index, exp});
    }
    return Word::reduce(raw);
  }

  std::string descriptor() const {
    return rank_ ? "free:" + std::to_string(*rank_) : "free:w";
  }

  friend bool operator==(const FreeGroup&, const FreeGroup&) = default;

 private:
  struct infinite_tag {};
  explicit FreeGroup(infinite_tag) {}

  void check_gen(std::uint64_t index) const {
    if (rank_ && index >= *rank_)
      throw parse_error("free backend: generator index " + std::to_string(index) +
                        " exceeds rank " + std::to_string(*rank_));
  }

  std::optional<std::uint64_t> rank_;  // nullopt: countably infinite rank
};

}  // namespace zariski
