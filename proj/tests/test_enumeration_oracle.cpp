#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Independent reconstruction of the staged enumeration contract: stage s
// contributes every not-yet-seen element of weight <= s over the first
// gens(s) generators, sorted by weight and then by the letter sequence
// (generator ascending, a positive letter before its inverse). Everything
// here is rebuilt from scratch -- brute-force generation, a local letter
// expansion, a local comparator -- and compared element by element against
// the production enumerators.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zariski/abelian.hpp"
#include "zariski/enumeration.hpp"
#include "zariski/free_group.hpp"
#include "zariski/tree_groups.hpp"

using namespace zariski;

namespace {

using LetterSeq = std::vector<std::pair<std::uint64_t, int>>;

LetterSeq expand_word(const Word& w) {
  LetterSeq out;
  for (const Letter& l : w.runs()) {
    int s = l.exp < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) out.push_back({l.gen, s});
  }
  return out;
}

bool letters_before(const LetterSeq& a, const LetterSeq& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return a[i].second > b[i].second;  // +1 first
  }
  return false;
}

template <class GensAt>
std::vector<Word> staged_word_oracle(GensAt gens_at, std::uint64_t max_stage) {
  std::vector<Word> out{Word{}};
  std::set<std::string> seen{""};
  auto key = [](const Word& w) {
    std::string k;
    for (const Letter& l : w.runs())
      k += std::to_string(l.gen) + "^" + std::to_string(l.exp) + " ";
    return k;
  };
  for (std::uint64_t s = 1; s <= max_stage; ++s) {
    std::vector<Word> fresh;
    for (const Word& w : oracle::all_words_up_to(gens_at(s), s))
      if (seen.insert(key(w)).second) fresh.push_back(w);
    std::sort(fresh.begin(), fresh.end(),
              [&](const Word& a, const Word& b) { return letters_before(expand_word(a), expand_word(b)); });
    out.insert(out.end(), fresh.begin(), fresh.end());
  }
  return out;
}

}  // namespace

TEST_CASE("free enumerations follow the staged contract") {
  SUBCASE("rank 2") {
    FreeGroup f2(2);
    auto expected = staged_word_oracle([](std::uint64_t s) { return std::min<std::uint64_t>(s + 1, 2); }, 5);
    auto en = f2.enumerator();
    for (const Word& w : expected) CHECK(*en.next() == w);
  }
  SUBCASE("rank 3") {
    FreeGroup f3(3);
    auto expected = staged_word_oracle([](std::uint64_t s) { return std::min<std::uint64_t>(s + 1, 3); }, 4);
    auto en = f3.enumerator();
    for (const Word& w : expected) CHECK(*en.next() == w);
  }
  SUBCASE("infinite rank") {
    FreeGroup fw = FreeGroup::infinite_rank();
    auto expected = staged_word_oracle([](std::uint64_t s) { return s + 1; }, 4);
    auto en = fw.enumerator();
    for (const Word& w : expected) CHECK(*en.next() == w);
  }
}

TEST_CASE("tree words follow the staged contract with depth stages") {
  TreeWordGroup ft;
  auto expected =
      staged_word_oracle([](std::uint64_t s) { return (std::uint64_t{2} << s) - 1; }, 3);
  auto en = ft.enumerator();
  for (const Word& w : expected) CHECK(*en.next() == w);
}

TEST_CASE("abelian enumeration follows the staged contract") {
  AbelianGroup g({0, 4, 0, 0, 2, 0});
  // brute force: all canonical exponent vectors of weight <= s on the first
  // gens(s) indices, deduplicated across stages, sorted like the letters
  auto gens_at = [&](std::uint64_t s) { return std::min<std::uint64_t>(s + 1, 6); };
  std::vector<AbelianElement> expected{g.identity()};
  std::set<std::string> seen{g.format_element(g.identity())};
  auto expand = [](const AbelianElement& a) {
    LetterSeq out;
    for (auto [i, e] : a.exps()) {
      int s = e < 0 ? -1 : 1;
      for (std::int64_t t = 0; t < (e < 0 ? -e : e); ++t) out.push_back({i, s});
    }
    return out;
  };
  for (std::uint64_t s = 1; s <= 4; ++s) {
    std::vector<AbelianElement> fresh;
    // raw vectors over indices < gens(s) with |entries| summing to <= s
    std::vector<std::pair<std::uint64_t, std::int64_t>> acc;
    auto rec = [&](auto&& self, std::uint64_t index, std::uint64_t remaining) -> void {
      AbelianElement e = g.make(acc);
      // keep only canonical-weight results (make() may fold torsion down)
      if (e.weight() <= s && seen.insert(g.format_element(e)).second) fresh.push_back(e);
      if (index >= gens_at(s) || remaining == 0) return;
      for (std::uint64_t mag = 1; mag <= remaining; ++mag) {
        for (int sign : {+1, -1}) {
          acc.push_back({index, sign * static_cast<std::int64_t>(mag)});
          self(self, index + 1, remaining - mag);
          acc.pop_back();
        }
      }
      self(self, index + 1, remaining);
    };
    rec(rec, 0, s);
    std::sort(fresh.begin(), fresh.end(), [&](const AbelianElement& a, const AbelianElement& b) {
      return letters_before(expand(a), expand(b));
    });
    expected.insert(expected.end(), fresh.begin(), fresh.end());
  }
  auto en = g.enumerator();
  for (const AbelianElement& e : expected) CHECK(*en.next() == e);
}
