#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/enumeration.hpp"
#include "zariski/errors.hpp"
#include "zariski/text.hpp"
#include "zariski/tree.hpp"
#include "zariski/word.hpp"

namespace zariski {

/// The free group over the nodes of the binary tree. Generators are nodes
/// (heap-indexed), written n[bits]. Enumeration stage s admits nodes of
/// depth <= s.
class TreeWordGroup {
 public:
  using element_type = Word;
  using enumerator_type = WordEnumerator;

  Word identity() const { return {}; }
  Word gen(TreeNode t) const { return Word::from_reduced({{t.idx, 1}}); }

  void validate(const Word&) const {}  // every node index is a generator

  Word mul(const Word& u, const Word& v) const { return zariski::mul(u, v); }
  Word inv(const Word& u) const { return zariski::inv(u); }
  bool eq(const Word& u, const Word& v) const { return u == v; }
  bool is_identity(const Word& u) const { return u.is_identity(); }

  WordEnumerator enumerator() const {
    StagePolicy p;
    p.kind = StagePolicy::Kind::tree_depth;
    return WordEnumerator(p);
  }

  std::string format_element(const Word& w) const {
    if (w.is_identity()) return "1";
    std::string s;
    for (const Letter& l : w.runs()) {
      if (!s.empty()) s += ' ';
      s += "n[";
      s += format_node_bits(TreeNode{l.gen});
      s += ']';
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
      if (!name.starts_with("n[") || !name.ends_with("]"))
        throw parse_error("tree backend: unknown generator \"" + std::string(tok) + "\"");
      TreeNode t = parse_node_bits(name.substr(2, name.size() - 3));
      raw.push_back({t.idx, exp});
    }
    return Word::reduce(raw);
  }

  std::string descriptor() const { return "tree-word"; }

  friend bool operator==(const TreeWordGroup&, const TreeWordGroup&) = default;
};

/// An element (w, f) of the semidirect product of the tree's free group by
/// its finitary automorphism group. (w, id) embeds the free group and
/// (1, f) the automorphisms.
struct SdElement {
  Word word;
  TreeAut aut;

  bool is_identity() const { return word.is_identity() && aut.is_identity(); }
  friend bool operator==(const SdElement&, const SdElement&) = default;
};

inline SdElement sd_mul(const SdElement& x, const SdElement& y) {
  return {mul(x.word, act_word(x.aut, y.word)), aut_compose(x.aut, y.aut)};
}

inline SdElement sd_inv(const SdElement& x) {
  TreeAut fi = aut_inverse(x.aut);
  return {act_word(fi, inv(x.word)), fi};
}

/// Finitary automorphisms ordered by (max labeled-node depth, portrait
/// size, lexicographic sorted label list); the identity comes first.
class AutEnumerator {
 public:
  std::optional<TreeAut> next() {
    while (pos_ >= batch_.size()) refill();
    return batch_[pos_++];
  }

 private:
  void refill() {
    pos_ = 0;
    batch_.clear();
    while (batch_.empty()) {
      if (!started_) {
        started_ = true;
        batch_.push_back(TreeAut::identity());
        return;
      }
      std::uint64_t universe = (std::uint64_t{2} << max_depth_) - 1;
      if (size_ < universe) {
        ++size_;
      } else {
        ++max_depth_;
        size_ = 1;
      }
      fill_batch();
    }
  }

  void fill_batch() {
    std::uint64_t universe = (std::uint64_t{2} << max_depth_) - 1;
    std::uint64_t min_deep = (std::uint64_t{1} << max_depth_) - 1;  // first node at max depth
    std::vector<std::uint64_t> pick(size_);
    // k-combinations of [0, universe) in lexicographic order, keeping those
    // that actually reach the new depth
    for (std::uint64_t i = 0; i < size_; ++i) pick[i] = i;
    while (true) {
      if (pick.back() >= min_deep) {
        std::vector<TreeNode> labels;
        labels.reserve(pick.size());
        for (std::uint64_t v : pick) labels.push_back(TreeNode{v});
        batch_.push_back(TreeAut::from_labels(std::move(labels)));
      }
      std::size_t j = pick.size();
      while (j > 0 && pick[j - 1] == universe - (pick.size() - j) - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < pick.size(); ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  bool started_ = false;
  std::uint64_t max_depth_ = 0;
  std::uint64_t size_ = 0;
  std::vector<TreeAut> batch_;
  std::size_t pos_ = 0;
};

class SdEnumerator;

/// The semidirect product backend. Elements are parsed and printed as
/// "(word; aut)".
class TreeSdGroup {
 public:
  using element_type = SdElement;
  using enumerator_type = SdEnumerator;

  SdElement identity() const { return {}; }
  SdElement embed_word(const Word& w) const { return {w, TreeAut::identity()}; }
  SdElement embed_aut(const TreeAut& f) const { return {Word{}, f}; }

  void validate(const SdElement&) const {}

  SdElement mul(const SdElement& x, const SdElement& y) const { return sd_mul(x, y); }
  SdElement inv(const SdElement& x) const { return sd_inv(x); }
  bool eq(const SdElement& x, const SdElement& y) const { return x == y; }
  bool is_identity(const SdElement& x) const { return x.is_identity(); }

  SdEnumerator enumerator() const;

  std::string format_element(const SdElement& x) const {
    return "(" + TreeWordGroup{}.format_element(x.word) + "; " + format_aut(x.aut) + ")";
  }

  SdElement parse_element(std::string_view text) const {
    text = detail::strip(text);
    if (text.starts_with("(")) {
      std::size_t close = text.rfind(')');
      if (close == std::string_view::npos)
        throw parse_error("semidirect literal: expected \"(word; aut)\"");
      std::int64_t exponent = 1;
      std::string_view tail = detail::strip(text.substr(close + 1));
      if (!tail.empty()) {
        if (!tail.starts_with("^"))
          throw parse_error("semidirect literal: junk after \"(word; aut)\"");
        exponent = detail::parse_int(tail.substr(1));
      }
      std::string_view body = text.substr(1, close - 1);
      std::size_t semi = body.find(';');
      if (semi == std::string_view::npos)
        throw parse_error("semidirect literal: expected \"(word; aut)\"");
      Word w = TreeWordGroup{}.parse_element(detail::strip(body.substr(0, semi)));
      TreeAut f = parse_aut(detail::strip(body.substr(semi + 1)));
      return pow({w, f}, exponent);
    }
    // bare word or bare automorphism, embedded
    if (text == "id" || text.starts_with("swap{")) return embed_aut(parse_aut(text));
    return embed_word(TreeWordGroup{}.parse_element(text));
  }

  SdElement pow(const SdElement& x, std::int64_t k) const {
    SdElement base = k < 0 ? inv(x) : x;
    std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
    SdElement acc;
    for (std::uint64_t i = 0; i < n; ++i) acc = mul(acc, base);
    return acc;
  }

  std::string descriptor() const { return "tree-sd"; }

  friend bool operator==(const TreeSdGroup&, const TreeSdGroup&) = default;
};

/// Dovetailed enumeration of the semidirect product: diagonal d emits the
/// pairs (word index i, automorphism index d - i) for i = 0..d, so index 0
/// is the identity and each pair appears exactly once.
class SdEnumerator {
 public:
  SdEnumerator()
      : words_(TreeWordGroup{}.enumerator()) {}

  std::optional<SdElement> next() {
    if (word_index_ > diagonal_) {
      ++diagonal_;
      word_index_ = 0;
    }
    const Word& w = word_at(word_index_);
    const TreeAut& f = aut_at(diagonal_ - word_index_);
    ++word_index_;
    return SdElement{w, f};
  }

 private:
  const Word& word_at(std::uint64_t i) {
    while (word_memo_.size() <= i) word_memo_.push_back(*words_.next());
    return word_memo_[i];
  }

  const TreeAut& aut_at(std::uint64_t i) {
    while (aut_memo_.size() <= i) aut_memo_.push_back(*auts_.next());
    return aut_memo_[i];
  }

  WordEnumerator words_;
  AutEnumerator auts_;
  std::vector<Word> word_memo_;
  std::vector<TreeAut> aut_memo_;
  std::uint64_t diagonal_ = 0;
  std::uint64_t word_index_ = 0;
};

inline SdEnumerator TreeSdGroup::enumerator() const { return SdEnumerator{}; }

}  // namespace zariski
