#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zariski/abelian.hpp"
#include "zariski/free_group.hpp"
#include "zariski/monomial.hpp"
#include "zariski/tree.hpp"
#include "zariski/tree_groups.hpp"
#include "zariski/witnesses.hpp"
#include "zariski/word.hpp"

namespace zariski {

/// Deterministic random source. Bounded draws go through plain modular
/// reduction on the standardized mt19937_64 stream, so identical seeds give
/// identical sequences on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : eng_() % bound; }

  std::int64_t int_between(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// A reduced word of up to max_letters letters over generators below
/// gen_bound. May come out shorter after reduction, including the identity.
inline Word random_word(Rng& rng, std::uint64_t gen_bound, std::size_t max_letters) {
  std::size_t len = rng.below(max_letters + 1);
  std::vector<Letter> raw;
  raw.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    raw.push_back({rng.below(gen_bound), rng.coin() ? 1 : -1});
  return Word::reduce(raw);
}

inline Word random_nonunit_word(Rng& rng, std::uint64_t gen_bound, std::size_t max_letters) {
  while (true) {
    Word w = random_word(rng, gen_bound, max_letters);
    if (!w.is_identity()) return w;
  }
}

inline AbelianElement random_abelian(Rng& rng, const AbelianGroup& g, std::uint64_t index_bound,
                                     std::size_t max_support, std::int64_t max_exp) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> raw;
  std::size_t support = rng.below(max_support + 1);
  for (std::size_t i = 0; i < support; ++i)
    raw.push_back({rng.below(index_bound), rng.int_between(-max_exp, max_exp)});
  return g.make(std::move(raw));
}

inline TreeAut random_aut(Rng& rng, int max_depth, std::size_t max_labels) {
  std::uint64_t universe = (std::uint64_t{2} << max_depth) - 1;
  std::vector<TreeNode> labels;
  std::size_t want = rng.below(max_labels + 1);
  for (std::size_t i = 0; i < want; ++i) labels.push_back(TreeNode{rng.below(universe)});
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return TreeAut::from_labels(std::move(labels));
}

inline Word random_tree_word(Rng& rng, int max_depth, std::size_t max_letters) {
  std::uint64_t universe = (std::uint64_t{2} << max_depth) - 1;
  return random_word(rng, universe, max_letters);
}

inline SdElement random_sd(Rng& rng, int max_depth, std::size_t max_letters,
                           std::size_t max_labels) {
  return {random_tree_word(rng, max_depth, max_letters), random_aut(rng, max_depth, max_labels)};
}

/// A random monomial of degree up to max_degree with coefficients drawn
/// from the supplied generator.
template <GroupBackend G, class CoeffFn>
Monomial<G> random_monomial(Rng& rng, const G& backend, std::size_t max_degree, CoeffFn&& coeff) {
  Monomial<G> m{backend, {}, {}};
  std::size_t degree = rng.below(max_degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) m.coeffs.push_back(coeff());
  for (std::size_t i = 0; i < degree; ++i) m.exps.push_back(rng.coin() ? 1 : -1);
  return m;
}

/// A nontrivial word over the allowed generator indices of a sub-alphabet
/// (drawn from its first index_spread members).
inline Word random_subalphabet_word(Rng& rng, const SubAlphabet& sub, std::size_t max_letters,
                                    std::uint64_t index_spread) {
  std::vector<std::uint64_t> indices = subalphabet_prefix(sub, index_spread);
  if (indices.empty()) throw precondition_error("sub-alphabet sampling: no allowed generators");
  while (true) {
    std::size_t len = 1 + rng.below(max_letters);
    std::vector<Letter> raw;
    raw.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      raw.push_back({indices[rng.below(indices.size())], rng.coin() ? 1 : -1});
    Word w = Word::reduce(raw);
    if (!w.is_identity()) return w;
  }
}

/// Same for a direct sum of cyclic groups.
inline AbelianElement random_subalphabet_abelian(Rng& rng, const AbelianGroup& g,
                                                 const SubAlphabet& sub, std::size_t max_support,
                                                 std::int64_t max_exp,
                                                 std::uint64_t index_spread) {
  std::vector<std::uint64_t> indices = subalphabet_prefix(sub, index_spread);
  if (indices.empty()) throw precondition_error("sub-alphabet sampling: no allowed generators");
  while (true) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> raw;
    std::size_t support = 1 + rng.below(max_support);
    for (std::size_t i = 0; i < support; ++i)
      raw.push_back({indices[rng.below(indices.size())], rng.int_between(-max_exp, max_exp)});
    AbelianElement e = g.make(std::move(raw));
    if (!e.is_identity()) return e;
  }
}

}  // namespace zariski
