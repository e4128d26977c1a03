#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "zariski/abelian.hpp"
#include "zariski/errors.hpp"
#include "zariski/free_group.hpp"
#include "zariski/monomial.hpp"

namespace zariski {

namespace detail {

template <GroupBackend G>
bool element_listed(const G& b, const std::vector<typename G::element_type>& list,
                    const typename G::element_type& x) {
  for (const auto& e : list)
    if (b.eq(e, x)) return true;
  return false;
}

inline void collect_used_gens(const Word& w, std::set<std::uint64_t>& used) {
  for (const Letter& l : w.runs()) used.insert(l.gen);
}

template <GroupBackend G>
std::set<std::uint64_t> coefficient_gens(const WitnessFamily<G>& W);

template <>
inline std::set<std::uint64_t> coefficient_gens(const WitnessFamily<FreeGroup>& W) {
  std::set<std::uint64_t> used;
  for (const auto& m : W.monomials)
    for (const Word& c : m.coeffs) collect_used_gens(c, used);
  return used;
}

}  // namespace detail

/// How separation_witness searches: the automatic choice takes the
/// fresh-generator shortcut where it applies; the enumeration scan stays
/// available on every backend for cross-validation.
enum class WitnessPath { automatic, enumeration };

/// Finds a nontrivial common point of the co-zero sets of W other than the
/// excluded elements. Requires the identity to already be such a point.
/// Over the infinite-rank free backend a generator fresh to every
/// coefficient works outright; otherwise the canonical enumeration is
/// scanned under the budget.
template <GroupBackend G>
typename G::element_type separation_witness(const WitnessFamily<G>& W,
                                            const std::vector<typename G::element_type>& exclude,
                                            std::uint64_t budget,
                                            WitnessPath path = WitnessPath::automatic) {
  const G& b = W.backend;
  if (!intersection_member(W, b.identity()))
    throw precondition_error("separation witness: identity not in the intersection");
  if constexpr (std::same_as<G, FreeGroup>) {
    if (path == WitnessPath::automatic && b.has_infinite_rank()) {
      std::set<std::uint64_t> used = detail::coefficient_gens(W);
      for (std::uint64_t idx = 0;; ++idx) {
        if (used.contains(idx)) continue;
        Word candidate = b.gen(idx);
        if (detail::element_listed(b, exclude, candidate)) continue;
        if (!intersection_member(W, candidate))
          throw precondition_error("separation witness: fresh-generator evaluation vanished");
        return candidate;
      }
    }
  }
  auto en = b.enumerator();
  for (std::uint64_t step = 0; step < budget; ++step) {
    auto x = en.next();
    if (!x) break;
    if (b.is_identity(*x)) continue;
    if (detail::element_listed(b, exclude, *x)) continue;
    if (intersection_member(W, *x)) return *x;
  }
  throw budget_exhausted("separation witness: no witness within budget");
}

/// A sub-alphabet of generator indices: everything except the excluded
/// ones, within the backend's rank when finite.
struct SubAlphabet {
  std::vector<std::uint64_t> excluded;          // sorted
  std::optional<std::uint64_t> universe_rank;   // nothing: countably many indices

  bool contains(std::uint64_t index) const {
    if (universe_rank && index >= *universe_rank) return false;
    return !std::binary_search(excluded.begin(), excluded.end(), index);
  }

  /// The k-th allowed index in increasing order.
  std::optional<std::uint64_t> member(std::uint64_t k) const {
    std::uint64_t idx = 0;
    while (true) {
      if (universe_rank && idx >= *universe_rank) return std::nullopt;
      if (!std::binary_search(excluded.begin(), excluded.end(), idx)) {
        if (k == 0) return idx;
        --k;
      }
      ++idx;
    }
  }

  std::vector<std::uint64_t> members_up_to_rank() const {
    std::vector<std::uint64_t> out;
    if (!universe_rank) return out;
    for (std::uint64_t i = 0; i < *universe_rank; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
};

/// The first `count` allowed indices (fewer when the universe runs out).
inline std::vector<std::uint64_t> subalphabet_prefix(const SubAlphabet& sub, std::uint64_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    auto m = sub.member(k);
    if (!m) break;
    out.push_back(*m);
  }
  return out;
}

/// For a family with w(1) != 1 throughout over a direct sum of cyclic
/// groups: the summands untouched by any w(1) span a subgroup on which
/// every family member still evaluates away from the identity, because
/// commutativity gives w(h) = w(1) h^k with the two factors supported on
/// disjoint summands.
inline SubAlphabet abelian_cozero_subalphabet(const WitnessFamily<AbelianGroup>& W) {
  const AbelianGroup& b = W.backend;
  std::set<std::uint64_t> forbidden;
  for (const auto& m : W.monomials) {
    AbelianElement at1 = eval_monomial(m, b.identity());
    if (b.is_identity(at1))
      throw precondition_error("cozero subgroup: a family member vanishes at the identity");
    for (auto [i, e] : at1.exps()) forbidden.insert(i);
  }
  return {std::vector<std::uint64_t>(forbidden.begin(), forbidden.end()), b.rank()};
}

/// For a free backend: the generators untouched by any coefficient span a
/// free factor whose nontrivial elements all stay inside every co-zero set;
/// substituting such an element embeds the normalized monomial into the
/// free product of the old letters with a fresh cyclic group.
inline SubAlphabet free_cozero_subalphabet(const WitnessFamily<FreeGroup>& W) {
  const FreeGroup& b = W.backend;
  for (const auto& m : W.monomials)
    if (b.is_identity(eval_monomial(m, b.identity())))
      throw precondition_error("cozero subgroup: a family member vanishes at the identity");
  std::set<std::uint64_t> used = detail::coefficient_gens(W);
  if (b.rank() && used.size() >= *b.rank()) {
    bool saturated = true;
    for (std::uint64_t i = 0; i < *b.rank() && saturated; ++i) saturated = used.contains(i);
    if (saturated)
      throw precondition_error("cozero subgroup: every generator occurs in a coefficient");
  }
  return {std::vector<std::uint64_t>(used.begin(), used.end()), b.rank()};
}

/// All products of exactly n factors from C, deduplicated, in first-seen
/// order. With the identity in C the result contains C; a symmetric C gives
/// a symmetric result.
template <GroupBackend G>
std::vector<typename G::element_type> set_power(const G& b,
                                                const std::vector<typename G::element_type>& C,
                                                std::size_t n) {
  if (n == 0) throw precondition_error("set power: exponent must be >= 1");
  auto dedup = [&](const std::vector<typename G::element_type>& in) {
    std::vector<typename G::element_type> out;
    std::unordered_set<std::string> seen;
    for (const auto& e : in)
      if (seen.insert(b.format_element(e)).second) out.push_back(e);
    return out;
  };
  std::vector<typename G::element_type> acc = dedup(C);
  std::vector<typename G::element_type> base = acc;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<typename G::element_type> next;
    next.reserve(acc.size() * base.size());
    for (const auto& p : acc)
      for (const auto& c : base) next.push_back(b.mul(p, c));
    acc = dedup(next);
  }
  return acc;
}

/// State of the inductive symmetric-set construction: the produced points
/// (starting from the identity) and the coefficient set driving the next
/// step. The generic path keeps the coefficient set materialized; the
/// fresh-letter path over the infinite-rank free backend only tracks its
/// generator support, because the set itself grows beyond desk scale.
template <GroupBackend G>
struct SymmetricSetState {
  using element = typename G::element_type;

  G backend;
  std::size_t degree = 0;                 // the n of the construction
  std::vector<element> points;            // x_0 = identity first
  std::vector<element> initial_coeffs;    // C_0
  std::optional<std::vector<element>> coeffs;  // current C_k on the generic path
  bool fresh_path = false;

  /// X = the points and their inverses.
  std::vector<element> symmetric_family() const {
    std::vector<element> out;
    std::unordered_set<std::string> seen;
    for (const auto& x : points) {
      for (const element& e : {x, backend.inv(x)})
        if (seen.insert(backend.format_element(e)).second) out.push_back(e);
    }
    return out;
  }
};

namespace detail {

template <GroupBackend G>
std::vector<typename G::element_type> symmetric_initial_coeffs(
    const G& b, const std::vector<std::vector<typename G::element_type>>& sets) {
  std::vector<typename G::element_type> c0{b.identity()};
  for (const auto& s : sets)
    for (const auto& e : s) {
      c0.push_back(e);
      c0.push_back(b.inv(e));
    }
  std::unordered_set<std::string> seen;
  std::vector<typename G::element_type> out;
  for (const auto& e : c0)
    if (seen.insert(b.format_element(e)).second) out.push_back(e);
  return out;
}

template <GroupBackend G>
void check_product_avoids_identity(const G& b,
                                   const std::vector<std::vector<typename G::element_type>>& sets) {
  std::vector<typename G::element_type> acc{b.identity()};
  for (const auto& s : sets) {
    if (s.empty()) throw precondition_error("symmetric set: empty coefficient set");
    std::vector<typename G::element_type> next;
    for (const auto& p : acc)
      for (const auto& e : s) next.push_back(b.mul(p, e));
    acc = std::move(next);
  }
  for (const auto& p : acc)
    if (b.is_identity(p))
      throw precondition_error("symmetric set: the plain product of the sets reaches the identity");
}

}  // namespace detail

/// Builds count points x_0 = 1, x_1, ... so that the symmetric family
/// X = {x_j, x_j^-1} keeps every interleaved product
/// a_0 y_1 a_1 ... y_n a_n (a_i from the given sets, y_i from X) away from
/// the identity. Each step separates the monomials over the grown
/// coefficient set that survive at the identity; over the infinite-rank
/// free backend a fresh generator is such a separation point without
/// materializing the family.
template <GroupBackend G>
SymmetricSetState<G> build_symmetric_set(const G& backend,
                                         const std::vector<std::vector<typename G::element_type>>& sets,
                                         std::size_t count, std::uint64_t budget) {
  if (sets.size() < 2) throw precondition_error("symmetric set: need at least two coefficient sets");
  if (count == 0) throw precondition_error("symmetric set: count must be >= 1");
  detail::check_product_avoids_identity(backend, sets);
  std::size_t n = sets.size() - 1;

  SymmetricSetState<G> st{backend, n, {}, {}, std::nullopt, false};
  st.initial_coeffs = detail::symmetric_initial_coeffs(backend, sets);
  st.points.push_back(backend.identity());

  bool fresh = false;
  if constexpr (std::same_as<G, FreeGroup>) fresh = backend.has_infinite_rank();
  st.fresh_path = fresh;

  if (fresh) {
    if constexpr (std::same_as<G, FreeGroup>) {
      std::set<std::uint64_t> support;
      for (const Word& c : st.initial_coeffs) detail::collect_used_gens(c, support);
      while (st.points.size() < count) {
        std::uint64_t idx = 0;
        while (support.contains(idx)) ++idx;
        support.insert(idx);
        st.points.push_back(backend.gen(idx));
      }
    }
    return st;
  }

  std::vector<typename G::element_type> C = st.initial_coeffs;
  for (std::size_t k = 1; k < count; ++k) {
    std::vector<typename G::element_type> grown = C;
    grown.push_back(backend.identity());
    grown.push_back(st.points.back());
    grown.push_back(backend.inv(st.points.back()));
    C = set_power(backend, grown, n);
    std::vector<Monomial<G>> wk;
    for (auto& m : monomials_over(backend, C, n))
      if (!backend.is_identity(eval_monomial(m, backend.identity()))) wk.push_back(std::move(m));
    auto W = WitnessFamily<G>::over(backend, std::move(wk));
    st.points.push_back(separation_witness(W, st.points, budget));
  }
  st.coeffs = std::move(C);
  return st;
}

struct SymmetricSetFailure {
  std::string product;  // formatted offending product
};

/// Exhaustively multiplies out a_0 y_1 a_1 ... y_n a_n over every tuple
/// from the symmetric family and every choice of coefficients; reports the
/// first identity hit, or nothing when the family works.
template <GroupBackend G>
std::optional<SymmetricSetFailure> verify_symmetric_set(
    const G& b, const std::vector<std::vector<typename G::element_type>>& sets,
    const SymmetricSetState<G>& st) {
  std::size_t n = sets.size() - 1;
  auto X = st.symmetric_family();
  // products of the prefix a_0 y_1 .. a_i, extended one slot at a time
  struct Partial {
    typename G::element_type value;
    std::string trail;
  };
  std::vector<Partial> acc;
  for (const auto& a : sets[0]) acc.push_back({a, b.format_element(a)});
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Partial> next;
    next.reserve(acc.size() * X.size() * sets[i].size());
    for (const auto& p : acc)
      for (const auto& y : X)
        for (const auto& a : sets[i])
          next.push_back({b.mul(b.mul(p.value, y), a),
                          p.trail + " * " + b.format_element(y) + " * " + b.format_element(a)});
    acc = std::move(next);
  }
  for (const auto& p : acc)
    if (b.is_identity(p.value)) return SymmetricSetFailure{p.trail};
  return std::nullopt;
}

}  // namespace zariski
