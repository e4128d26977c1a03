#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zariski/abelian.hpp"
#include "zariski/word.hpp"

namespace zariski {

/// How many generators a staged enumeration may use at stage s. Stages grow
/// the alphabet together with the weight bound, so infinite-rank backends
/// are still exhausted in the limit.
struct StagePolicy {
  enum class Kind { finite_rank, infinite_rank, tree_depth };
  Kind kind = Kind::finite_rank;
  std::uint64_t rank = 1;  // finite_rank only

  std::uint64_t gens_at(std::uint64_t stage) const {
    switch (kind) {
      case Kind::finite_rank: return std::min<std::uint64_t>(stage + 1, rank);
      case Kind::infinite_rank: return stage + 1;
      case Kind::tree_depth: return (std::uint64_t{2} << stage) - 1;  // nodes of depth <= stage
    }
    return 1;
  }
};

/// Deterministic, duplicate-free, exhaustive-in-the-limit enumeration of
/// reduced words. Stage s contributes every not-yet-seen word of weight
/// <= s over the first gens_at(s) generators, ordered by (weight, canonical
/// letter order). Index 0 is the identity.
class WordEnumerator {
 public:
  explicit WordEnumerator(StagePolicy policy) : policy_(policy) {}

  std::optional<Word> next() {
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
        batch_.push_back(Word{});  // stage 0: the identity
        return;
      }
      if (weight_ == stage_) {
        ++stage_;
        weight_ = 1;
      } else {
        ++weight_;
      }
      fill_batch();
    }
  }

  void fill_batch() {
    std::uint64_t n = policy_.gens_at(stage_);
    std::uint64_t n_prev = policy_.gens_at(stage_ - 1);
    bool repeat_weight = weight_ < stage_;  // weight seen before, new gens required
    if (repeat_weight && n == n_prev) return;
    std::vector<SignedLetter> seq(weight_);
    dfs(seq, 0, n, repeat_weight ? n_prev : 0, false);
  }

  // Generates reduced letter sequences in canonical order: generator
  // ascending, positive before negative, no letter cancelling its
  // predecessor.
  void dfs(std::vector<SignedLetter>& seq, std::size_t at, std::uint64_t n,
           std::uint64_t need_gen_at_least, bool has_new) {
    if (at == seq.size()) {
      if (need_gen_at_least == 0 || has_new) batch_.push_back(from_letters(seq));
      return;
    }
    for (std::uint64_t g = 0; g < n; ++g) {
      for (int s : {+1, -1}) {
        if (at > 0 && seq[at - 1].first == g && seq[at - 1].second != s) continue;
        seq[at] = {g, s};
        dfs(seq, at + 1, n, need_gen_at_least, has_new || g >= need_gen_at_least);
      }
    }
  }

  StagePolicy policy_;
  bool started_ = false;
  std::uint64_t stage_ = 0;
  std::uint64_t weight_ = 0;
  std::vector<Word> batch_;
  std::size_t pos_ = 0;
};

/// Same staged ordering for direct sums of cyclic groups. An element's
/// canonical letter sequence lists each supported index in ascending order,
/// repeated |exponent| times with its sign; torsion summands only carry
/// canonical positive exponents below the modulus.
class AbelianEnumerator {
 public:
  explicit AbelianEnumerator(AbelianGroup group) : group_(std::move(group)) {}

  std::optional<AbelianElement> next() {
    if (group_.size() && emitted_ == *group_.size()) return std::nullopt;
    while (pos_ >= batch_.size()) refill();
    ++emitted_;
    return batch_[pos_++];
  }

 private:
  std::uint64_t gens_at(std::uint64_t stage) const {
    std::uint64_t n = stage + 1;
    if (auto r = group_.rank()) n = std::min<std::uint64_t>(n, *r);
    return n;
  }

  void refill() {
    pos_ = 0;
    batch_.clear();
    while (batch_.empty()) {
      if (!started_) {
        started_ = true;
        batch_.push_back(group_.identity());
        return;
      }
      if (weight_ == stage_) {
        ++stage_;
        weight_ = 1;
      } else {
        ++weight_;
      }
      std::uint64_t n = gens_at(stage_);
      std::uint64_t n_prev = gens_at(stage_ - 1);
      bool repeat_weight = weight_ < stage_;
      if (repeat_weight && n == n_prev) continue;
      std::vector<std::pair<std::uint64_t, std::int64_t>> acc;
      dfs(acc, 0, weight_, n, repeat_weight ? n_prev : 0);
    }
  }

  void dfs(std::vector<std::pair<std::uint64_t, std::int64_t>>& acc, std::uint64_t index,
           std::uint64_t remaining, std::uint64_t n, std::uint64_t need_gen_at_least) {
    if (remaining == 0) {
      if (need_gen_at_least == 0 || (!acc.empty() && acc.back().first >= need_gen_at_least))
        batch_.push_back(group_.make(acc));
      return;
    }
    if (index >= n) return;
    std::uint64_t m = group_.modulus(index);
    std::uint64_t cap = m == 0 ? remaining : std::min<std::uint64_t>(remaining, m - 1);
    for (std::uint64_t e = cap; e >= 1; --e) {
      acc.push_back({index, static_cast<std::int64_t>(e)});
      dfs(acc, index + 1, remaining - e, n, need_gen_at_least);
      acc.pop_back();
    }
    if (m == 0) {
      for (std::uint64_t e = remaining; e >= 1; --e) {
        acc.push_back({index, -static_cast<std::int64_t>(e)});
        dfs(acc, index + 1, remaining - e, n, need_gen_at_least);
        acc.pop_back();
      }
    }
    dfs(acc, index + 1, remaining, n, need_gen_at_least);
  }

  AbelianGroup group_;
  bool started_ = false;
  std::uint64_t stage_ = 0;
  std::uint64_t weight_ = 0;
  std::uint64_t emitted_ = 0;
  std::vector<AbelianElement> batch_;
  std::size_t pos_ = 0;
};

inline AbelianEnumerator AbelianGroup::enumerator() const { return AbelianEnumerator(*this); }

/// The element at an enumeration index, by scanning from the start. O(i);
/// meant for spot checks, not loops.
template <class G>
typename G::element_type element_at(const G& backend, std::uint64_t index) {
  auto e = backend.enumerator();
  for (std::uint64_t i = 0; i < index; ++i) {
    if (!e.next()) throw precondition_error("element_at: enumeration exhausted");
  }
  auto v = e.next();
  if (!v) throw precondition_error("element_at: enumeration exhausted");
  return *v;
}

template <class G>
std::vector<typename G::element_type> first_elements(const G& backend, std::uint64_t count) {
  std::vector<typename G::element_type> out;
  out.reserve(count);
  auto e = backend.enumerator();
  for (std::uint64_t i = 0; i < count; ++i) {
    auto v = e.next();
    if (!v) break;
    out.push_back(*v);
  }
  return out;
}

}  // namespace zariski
