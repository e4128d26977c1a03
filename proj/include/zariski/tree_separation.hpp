#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/monomial.hpp"
#include "zariski/tree.hpp"
#include "zariski/tree_groups.hpp"
#include "zariski/word.hpp"

namespace zariski {

/// Words conjugate to a parent-times-left-child generator pair form the
/// left closure; parent-times-right-child pairs the right closure. The two
/// closures are disjoint, which the classification below decides
/// syntactically on the cyclic core.
enum class LrClass { LeftClosure, RightClosure, Neither };

namespace detail {

/// Classification on a raw signed-letter view of a reduced word;
/// allocation-free so bulk scans can use it directly.
inline LrClass lr_classify_letters(std::span<const SignedLetter> letters) {
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo].first == letters[hi - 1].first &&
         letters[lo].second != letters[hi - 1].second) {
    ++lo;
    --hi;
  }
  if (hi - lo != 2) return LrClass::Neither;
  auto [g1, s1] = letters[lo];
  auto [g2, s2] = letters[lo + 1];
  if (s1 != 1 || s2 != 1) return LrClass::Neither;
  // conjugates of (parent, child) are exactly the two cyclic rotations
  if (g2 == 2 * g1 + 1 || g1 == 2 * g2 + 1) return LrClass::LeftClosure;
  if (g2 == 2 * g1 + 2 || g1 == 2 * g2 + 2) return LrClass::RightClosure;
  return LrClass::Neither;
}

}  // namespace detail

inline LrClass lr_classify(const Word& w) {
  std::vector<SignedLetter> letters = to_letters(w);
  return detail::lr_classify_letters(letters);
}

/// The built prefix of the inductive pair construction over the tree's free
/// group: for each enumerated non-unit word w[n], points a[n] and
/// b[n] = w[n] a[n] w[n]^-1 chosen first-fit so that a[n] avoids both
/// closures and neither sequence meets the other.
class SeparatingPairs {
 public:
  std::size_t count() const { return a_.size(); }
  const std::vector<Word>& w() const { return w_; }
  const std::vector<Word>& a() const { return a_; }
  const std::vector<Word>& b() const { return b_; }

  /// Index of x in the non-unit word enumeration, if built so far.
  std::optional<std::size_t> index_of_word(const Word& x) const {
    auto it = word_index_.find(key(x));
    if (it == word_index_.end()) return std::nullopt;
    return it->second;
  }

  bool in_a_prefix(const Word& g) const { return a_set_.contains(key(g)); }
  bool in_b_prefix(const Word& g) const { return b_set_.contains(key(g)); }

  void extend(std::size_t new_count, std::uint64_t scan_budget = 100000) {
    while (count() < new_count) {
      Word wn = next_nonunit_word();
      word_index_.emplace(key(wn), w_.size());
      w_.push_back(wn);
      std::optional<Word> found;
      auto cand = TreeWordGroup{}.enumerator();
      for (std::uint64_t step = 0; step < scan_budget && !found; ++step) {
        Word c = *cand.next();
        if (commutes(c, wn)) continue;  // keeps b distinct from a
        if (lr_classify(c) != LrClass::Neither) continue;
        Word bc = mul(mul(wn, c), inv(wn));
        if (b_set_.contains(key(c))) continue;
        if (a_set_.contains(key(bc))) continue;
        found = c;
        a_.push_back(c);
        b_.push_back(bc);
        a_set_.insert(key(c));
        b_set_.insert(key(bc));
      }
      if (!found) throw budget_exhausted("separating pairs: candidate scan budget exceeded");
    }
  }

 private:
  Word next_nonunit_word() {
    if (!enum_) enum_ = TreeWordGroup{}.enumerator();
    while (true) {
      Word w = *enum_->next();
      if (!w.is_identity()) return w;
    }
  }

  static std::string key(const Word& w) { return TreeWordGroup{}.format_element(w); }

  std::vector<Word> w_, a_, b_;
  std::unordered_set<std::string> a_set_, b_set_;
  std::unordered_map<std::string, std::size_t> word_index_;
  std::optional<WordEnumerator> enum_;
};

inline SeparatingPairs build_separating_pairs(std::size_t count,
                                              std::uint64_t scan_budget = 100000) {
  if (count == 0) throw precondition_error("separating pairs: count must be >= 1");
  SeparatingPairs p;
  p.extend(count, scan_budget);
  return p;
}

enum class Membership { Yes, No, BeyondPrefix };

/// Membership in the countable set A (the left closure together with the
/// constructed a-sequence). Words in the opposite closure or equal to a
/// built b-entry are definite non-members; unclassified words outside the
/// built prefix stay undecided.
inline Membership side_a_member(const SeparatingPairs& p, const Word& g) {
  switch (lr_classify(g)) {
    case LrClass::LeftClosure: return Membership::Yes;
    case LrClass::RightClosure: return Membership::No;
    case LrClass::Neither: break;
  }
  if (p.in_a_prefix(g)) return Membership::Yes;
  if (p.in_b_prefix(g)) return Membership::No;
  return Membership::BeyondPrefix;
}

inline Membership side_b_member(const SeparatingPairs& p, const Word& g) {
  switch (lr_classify(g)) {
    case LrClass::RightClosure: return Membership::Yes;
    case LrClass::LeftClosure: return Membership::No;
    case LrClass::Neither: break;
  }
  if (p.in_b_prefix(g)) return Membership::Yes;
  if (p.in_a_prefix(g)) return Membership::No;
  return Membership::BeyondPrefix;
}

struct WitnessPair {
  Word a, b;
};

/// For a non-unit x = (w, f), a pair (a, b) with a in A, b in B and
/// x (a, id) x^-1 = (b, id). A pure word x uses its constructed pair; an x
/// with a moving automorphism conjugates the parent-child word at the
/// minimal labeled node, which f sends into the right closure.
inline WitnessPair conjugation_witness(const SdElement& x, const SeparatingPairs& p) {
  if (x.is_identity()) throw precondition_error("conjugation witness: identity input");
  if (x.aut.is_identity()) {
    auto n = p.index_of_word(x.word);
    if (!n) throw prefix_exhausted("conjugation witness: word outside the built prefix");
    return {p.a()[*n], p.b()[*n]};
  }
  TreeNode parent = *minimal_labeled_node(x.aut);
  TreeWordGroup ft;
  Word a = mul(ft.gen(parent), ft.gen(parent.child(0)));
  Word b = mul(mul(x.word, act_word(x.aut, a)), inv(x.word));
  return {a, b};
}

struct SdWitnessReport {
  struct Item {
    SdElement x;
    Word a, b;
    SdElement conjugate;  // x (a, id) x^-1 as computed
    bool ok = false;
  };
  std::vector<Item> items;
  std::size_t pass = 0;
  std::size_t fail = 0;
  bool prefixes_disjoint = true;
};

/// Runs the witness check over the first x_budget enumerated elements of
/// the semidirect product (the identity is skipped): each x must conjugate
/// its witness a onto b with a in A and b in B, so the degree-2 monomial
/// x a x^-1 b^-1 vanishes at x. Also confirms A and B stay disjoint across
/// the same enumeration prefix. Extends the pair table on demand.
inline SdWitnessReport verify_sd_witnesses(SeparatingPairs& p, std::size_t x_budget) {
  SdWitnessReport report;
  TreeSdGroup sd;
  auto en = sd.enumerator();
  for (std::size_t i = 0; i < x_budget; ++i) {
    SdElement x = *en.next();
    if (x.is_identity()) continue;
    WitnessPair wp;
    while (true) {
      try {
        wp = conjugation_witness(x, p);
        break;
      } catch (const prefix_exhausted&) {
        p.extend(p.count() + 64);
      }
    }
    SdElement conjugate = sd_mul(sd_mul(x, sd.embed_word(wp.a)), sd_inv(x));
    bool ok = conjugate == sd.embed_word(wp.b);
    ok = ok && side_a_member(p, wp.a) == Membership::Yes;
    ok = ok && side_b_member(p, wp.b) == Membership::Yes;
    Monomial<TreeSdGroup> m{sd,
                            {sd.identity(), sd.embed_word(wp.a), sd.inv(sd.embed_word(wp.b))},
                            {+1, -1}};
    ok = ok && sd.is_identity(eval_monomial(m, x));
    report.items.push_back({x, wp.a, wp.b, conjugate, ok});
    ++(ok ? report.pass : report.fail);
  }
  // disjointness over the same-sized enumeration prefix of the word group
  auto wn = TreeWordGroup{}.enumerator();
  for (std::size_t i = 0; i < x_budget; ++i) {
    Word g = *wn.next();
    if (side_a_member(p, g) == Membership::Yes && side_b_member(p, g) == Membership::Yes)
      report.prefixes_disjoint = false;
  }
  for (std::size_t i = 0; i < p.count() && report.prefixes_disjoint; ++i)
    for (std::size_t j = 0; j < p.count(); ++j)
      if (p.a()[i] == p.b()[j]) report.prefixes_disjoint = false;
  return report;
}

}  // namespace zariski
