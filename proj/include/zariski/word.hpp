#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zariski/errors.hpp"

namespace zariski {

/// One maximal run of a generator inside a reduced word: gen^exp with
/// exp != 0.
struct Letter {
  std::uint64_t gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word over indexed generators. Adjacent runs carry
/// distinct generators, every exponent is nonzero, and the empty run list is
/// the identity. Words are immutable after construction; all operations
/// return fresh values.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary run list. Idempotent.
  static Word reduce(std::span<const Letter> raw) {
    Word w;
    for (const Letter& l : raw) w.push_reduced(l);
    return w;
  }

  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.end()));
  }

  /// Wraps runs that are already known to satisfy the reduced-word
  /// invariants. Checked, so malformed callers fail loudly.
  static Word from_reduced(std::vector<Letter> runs) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].exp == 0) throw precondition_error("word: zero exponent run");
      if (i > 0 && runs[i].gen == runs[i - 1].gen)
        throw precondition_error("word: adjacent runs share a generator");
    }
    Word w;
    w.runs_ = std::move(runs);
    return w;
  }

  const std::vector<Letter>& runs() const { return runs_; }
  bool is_identity() const { return runs_.empty(); }

  /// Sum of |exponents|; the reduced length of the word.
  std::uint64_t weight() const {
    std::uint64_t s = 0;
    for (const Letter& l : runs_) s += static_cast<std::uint64_t>(l.exp < 0 ? -l.exp : l.exp);
    return s;
  }

  std::uint64_t max_gen() const {  // identity -> 0
    std::uint64_t m = 0;
    for (const Letter& l : runs_)
      if (l.gen > m) m = l.gen;
    return m;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word mul(const Word&, const Word&);
  friend Word inv(const Word&);

  void push_reduced(Letter l) {
    if (l.exp == 0) return;
    if (!runs_.empty() && runs_.back().gen == l.gen) {
      runs_.back().exp += l.exp;
      if (runs_.back().exp == 0) runs_.pop_back();
      return;
    }
    runs_.push_back(l);
  }

  std::vector<Letter> runs_;
};

inline Word mul(const Word& u, const Word& v) {
  Word w = u;
  for (const Letter& l : v.runs()) w.push_reduced(l);
  return w;
}

inline Word inv(const Word& u) {
  Word w;
  w.runs_.reserve(u.runs().size());
  for (auto it = u.runs().rbegin(); it != u.runs().rend(); ++it)
    w.runs_.push_back({it->gen, -it->exp});
  return w;
}

inline Word pow(const Word& u, std::int64_t k) {
  Word base = k < 0 ? inv(u) : u;
  std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Word acc;
  for (std::uint64_t i = 0; i < n; ++i) acc = mul(acc, base);
  return acc;
}

inline bool commutes(const Word& u, const Word& v) { return mul(u, v) == mul(v, u); }

/// A word as individual signed letters: (gen, +1|-1) per position.
using SignedLetter = std::pair<std::uint64_t, int>;

inline std::vector<SignedLetter> to_letters(const Word& w) {
  std::vector<SignedLetter> out;
  out.reserve(w.weight());
  for (const Letter& l : w.runs()) {
    int s = l.exp < 0 ? -1 : 1;
    std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
    for (std::int64_t i = 0; i < n; ++i) out.emplace_back(l.gen, s);
  }
  return out;
}

inline Word from_letters(std::span<const SignedLetter> letters) {
  std::vector<Letter> raw;
  raw.reserve(letters.size());
  for (auto [g, s] : letters) raw.push_back({g, s});
  return Word::reduce(raw);
}

/// Canonical total order on words: weight first, then the letter sequence
/// compared position by position with generators ascending and a positive
/// letter before its inverse. This is the order all enumerations and
/// tie-breaks use.
inline int compare(const Word& u, const Word& v) {
  std::uint64_t wu = u.weight(), wv = v.weight();
  if (wu != wv) return wu < wv ? -1 : 1;
  auto iu = u.runs().begin();
  auto iv = v.runs().begin();
  std::int64_t du = 0, dv = 0;  // letters consumed inside the current run
  while (iu != u.runs().end() && iv != v.runs().end()) {
    std::uint64_t gu = iu->gen, gv = iv->gen;
    int su = iu->exp < 0 ? 1 : 0, sv = iv->exp < 0 ? 1 : 0;
    if (gu != gv) return gu < gv ? -1 : 1;
    if (su != sv) return su < sv ? -1 : 1;
    std::int64_t nu = iu->exp < 0 ? -iu->exp : iu->exp;
    std::int64_t nv = iv->exp < 0 ? -iv->exp : iv->exp;
    std::int64_t step = std::min(nu - du, nv - dv);
    du += step;
    dv += step;
    if (du == nu) { ++iu; du = 0; }
    if (dv == nv) { ++iv; dv = 0; }
  }
  return 0;  // equal weight and one exhausted the other => identical
}

inline bool word_less(const Word& u, const Word& v) { return compare(u, v) < 0; }

/// Splits w as conjugator * core * conjugator^-1 with the core cyclically
/// reduced (first and last letters are not mutually inverse).
inline std::pair<Word, Word> cyclic_reduce(const Word& w) {
  std::vector<Letter> runs = w.runs();
  std::vector<Letter> conj;
  std::size_t lo = 0, hi = runs.size();
  while (hi - lo >= 2 && runs[lo].gen == runs[hi - 1].gen) {
    Letter& f = runs[lo];
    Letter& b = runs[hi - 1];
    if (f.exp + b.exp == 0) {
      conj.push_back(f);
      ++lo;
      --hi;
      continue;
    }
    if ((f.exp < 0) == (b.exp < 0)) break;  // same-sign ends: cyclically reduced
    std::int64_t fa = f.exp < 0 ? -f.exp : f.exp;
    std::int64_t ba = b.exp < 0 ? -b.exp : b.exp;
    std::int64_t s = (f.exp < 0 ? -1 : 1) * std::min(fa, ba);
    conj.push_back({f.gen, s});
    f.exp -= s;
    b.exp += s;
    if (f.exp == 0) ++lo;
    if (b.exp == 0) --hi;
  }
  Word core = Word::from_reduced(
      std::vector<Letter>(runs.begin() + static_cast<std::ptrdiff_t>(lo),
                          runs.begin() + static_cast<std::ptrdiff_t>(hi)));
  return {core, Word::from_reduced(std::move(conj))};
}

/// w = root^k with the root not a proper power; k maximal. In a free group
/// the centralizer of w is then the cyclic group generated by the root.
/// Throws on the identity.
inline std::pair<Word, std::int64_t> word_root(const Word& w) {
  if (w.is_identity()) throw precondition_error("word_root: identity input");
  auto [core, conj] = cyclic_reduce(w);
  std::vector<SignedLetter> letters = to_letters(core);
  std::size_t n = letters.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = letters[i] == letters[i - d];
    if (!periodic) continue;
    Word root_core = from_letters(std::span(letters.data(), d));
    Word root = mul(mul(conj, root_core), inv(conj));
    return {root, static_cast<std::int64_t>(n / d)};
  }
  return {w, 1};  // unreachable: d == n always matches
}

/// True iff y lies in the cyclic subgroup generated by r (r not the
/// identity and not a proper power).
inline bool cyclic_subgroup_member(const Word& y, const Word& root) {
  if (y.is_identity()) return true;
  auto [r, k] = word_root(y);
  return r == root || r == inv(root);
}

/// Solves g * u * g^-1 = v. Returns the canonical solution (minimal in the
/// canonical word order over the whole solution coset) or nothing when u
/// and v are not conjugate.
inline std::optional<Word> conjugacy_solve(const Word& u, const Word& v) {
  if (u == v) return Word{};
  if (u.is_identity() || v.is_identity()) return std::nullopt;
  auto [core_u, conj_u] = cyclic_reduce(u);
  auto [core_v, conj_v] = cyclic_reduce(v);
  std::vector<SignedLetter> lu = to_letters(core_u);
  std::vector<SignedLetter> lv = to_letters(core_v);
  if (lu.size() != lv.size()) return std::nullopt;
  std::size_t n = lu.size();
  std::optional<Word> particular;
  for (std::size_t k = 0; k < n && !particular; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = lu[(k + i) % n] == lv[i];
    if (!match) continue;
    // rotation by k conjugates core_u onto core_v via the inverse of its
    // length-k prefix
    Word p = from_letters(std::span(lu.data(), k));
    particular = mul(mul(conj_v, inv(p)), inv(conj_u));
  }
  if (!particular) return std::nullopt;
  // The full solution set is particular * <root(u)>; minimize over it.
  Word root = word_root(u).first;
  Word best = *particular;
  std::int64_t bound = 2 * static_cast<std::int64_t>(particular->weight()) + 1;
  Word fwd = *particular, bwd = *particular;
  Word rinv = inv(root);
  for (std::int64_t m = 1; m <= bound; ++m) {
    fwd = mul(fwd, root);
    bwd = mul(bwd, rinv);
    if (compare(fwd, best) < 0) best = fwd;
    if (compare(bwd, best) < 0) best = bwd;
  }
  return best;
}

}  // namespace zariski
