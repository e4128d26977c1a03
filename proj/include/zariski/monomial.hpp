#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/text.hpp"

namespace zariski {

/// The behavioral contract every concrete group backend satisfies.
template <class G>
concept GroupBackend = std::regular<typename G::element_type> &&
    requires(const G& g, const typename G::element_type& a, const typename G::element_type& b,
             std::string_view text) {
      { g.identity() } -> std::same_as<typename G::element_type>;
      { g.mul(a, b) } -> std::same_as<typename G::element_type>;
      { g.inv(a) } -> std::same_as<typename G::element_type>;
      { g.eq(a, b) } -> std::same_as<bool>;
      { g.is_identity(a) } -> std::same_as<bool>;
      { g.format_element(a) } -> std::same_as<std::string>;
      { g.parse_element(text) } -> std::same_as<typename G::element_type>;
      { g.enumerator() };
      { g.descriptor() } -> std::same_as<std::string>;
    };

/// True iff y commutes with a. In a free group this is equivalent to y
/// lying in the cyclic group generated by the root of a (for a != 1).
template <class G>
bool centralizer_member(const G& b, const typename G::element_type& y,
                        const typename G::element_type& a) {
  return b.eq(b.mul(y, a), b.mul(a, y));
}

/// A monomial a0 x^e1 a1 x^e2 ... x^en an over a group backend: n+1
/// coefficients and n variable exponents, each +1 or -1. The representation
/// is syntactic; unit coefficients are kept and no free-product
/// cancellation happens unless normalize() is called. The degree is n.
template <GroupBackend G>
struct Monomial {
  using element = typename G::element_type;

  G backend;
  std::vector<element> coeffs;  // degree + 1 entries
  std::vector<int> exps;        // each +1 or -1

  std::size_t degree() const { return exps.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

template <GroupBackend G>
Monomial<G> constant_monomial(const G& backend, const typename G::element_type& a) {
  return {backend, {a}, {}};
}

/// Parses the monomial grammar: whitespace-separated factors, each "x",
/// "x^k", an element term, or "1". Consecutive element factors fold into one
/// coefficient by backend multiplication; "x^k" expands into |k| alternating
/// variable letters with unit coefficients between.
template <GroupBackend G>
Monomial<G> parse_monomial(const G& backend, std::string_view text) {
  Monomial<G> m{backend, {}, {}};
  auto pending = backend.identity();
  for (std::string_view tok : detail::split_factors(text)) {
    if (tok == "x" || tok.starts_with("x^")) {
      std::int64_t k = tok == "x" ? 1 : detail::parse_int(tok.substr(2));
      int sign = k < 0 ? -1 : 1;
      for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
        m.coeffs.push_back(pending);
        m.exps.push_back(sign);
        pending = backend.identity();
      }
      continue;
    }
    pending = backend.mul(pending, backend.parse_element(tok));
  }
  m.coeffs.push_back(pending);
  return m;
}

template <GroupBackend G>
std::string format_monomial(const Monomial<G>& m) {
  const G& b = m.backend;
  std::string out;
  auto append = [&out](std::string_view part) {
    if (!out.empty()) out += ' ';
    out += part;
  };
  if (!b.is_identity(m.coeffs[0])) append(b.format_element(m.coeffs[0]));
  std::size_t i = 0;
  while (i < m.exps.size()) {
    // merge a maximal same-sign run of variable letters separated by unit
    // coefficients into one x^k factor
    std::size_t j = i + 1;
    while (j < m.exps.size() && m.exps[j] == m.exps[i] && b.is_identity(m.coeffs[j])) ++j;
    std::int64_t k = static_cast<std::int64_t>(j - i) * m.exps[i];
    if (k == 1)
      append("x");
    else
      append("x^" + std::to_string(k));
    if (!b.is_identity(m.coeffs[j])) append(b.format_element(m.coeffs[j]));
    i = j;
  }
  return out.empty() ? "1" : out;
}

/// The evaluation homomorphism at g: substitute the variable by g and
/// multiply out. At fixed g this is a group homomorphism identical on the
/// coefficients.
template <GroupBackend G>
typename G::element_type eval_monomial(const Monomial<G>& m, const typename G::element_type& g) {
  const G& b = m.backend;
  b.validate(g);
  auto gi = b.inv(g);
  auto acc = m.coeffs[0];
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    acc = b.mul(acc, m.exps[i] > 0 ? g : gi);
    acc = b.mul(acc, m.coeffs[i + 1]);
  }
  return acc;
}

/// Membership in the co-zero set of m: the evaluations that do not vanish.
template <GroupBackend G>
bool cozero_contains(const Monomial<G>& m, const typename G::element_type& g) {
  return !m.backend.is_identity(eval_monomial(m, g));
}

/// Concatenation is multiplication in the coefficient-extension group: the
/// seam coefficients merge and evaluation distributes over it.
template <GroupBackend G>
Monomial<G> monomial_concat(const Monomial<G>& m1, const Monomial<G>& m2) {
  if (!(m1.backend == m2.backend)) throw backend_mismatch("monomial concat: different backends");
  Monomial<G> out = m1;
  out.coeffs.back() = m1.backend.mul(m1.coeffs.back(), m2.coeffs.front());
  out.coeffs.insert(out.coeffs.end(), m2.coeffs.begin() + 1, m2.coeffs.end());
  out.exps.insert(out.exps.end(), m2.exps.begin(), m2.exps.end());
  return out;
}

/// Cancels x^e 1 x^-e blocks (merging the surrounding coefficients) until
/// none remain. The result is the normal form of the monomial in the free
/// product of the backend with the cyclic group generated by the variable;
/// evaluation at every point is unchanged.
template <GroupBackend G>
Monomial<G> monomial_normalize(const Monomial<G>& m) {
  const G& b = m.backend;
  Monomial<G> out = m;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < out.exps.size(); ++i) {
      if (out.exps[i + 1] != -out.exps[i] || !b.is_identity(out.coeffs[i + 1])) continue;
      out.coeffs[i] = b.mul(out.coeffs[i], out.coeffs[i + 2]);
      out.coeffs.erase(out.coeffs.begin() + i + 1, out.coeffs.begin() + i + 3);
      out.exps.erase(out.exps.begin() + i, out.exps.begin() + i + 2);
      again = true;
      break;
    }
  }
  return out;
}

/// Substitution of the variable by b*x: evaluation satisfies
/// eval(shift(m, b), g) = eval(m, b*g).
template <GroupBackend G>
Monomial<G> monomial_shift(const Monomial<G>& m, const typename G::element_type& by) {
  const G& b = m.backend;
  b.validate(by);
  Monomial<G> out = m;
  auto byi = b.inv(by);
  for (std::size_t i = 0; i < out.exps.size(); ++i) {
    if (out.exps[i] > 0)
      out.coeffs[i] = b.mul(out.coeffs[i], by);
    else
      out.coeffs[i + 1] = b.mul(byi, out.coeffs[i + 1]);
  }
  return out;
}

/// Substitution of the variable by its inverse: eval(invert_var(m), g) =
/// eval(m, g^-1).
template <GroupBackend G>
Monomial<G> monomial_invert_var(const Monomial<G>& m) {
  Monomial<G> out = m;
  for (int& e : out.exps) e = -e;
  return out;
}

/// All syntactic monomials of degree <= n with coefficients drawn from A,
/// built by the degree recursion (append one variable letter and one
/// coefficient on the right), deduplicated syntactically. For pairwise
/// distinct A the count is sum over k <= n of |A|^(k+1) * 2^k.
template <GroupBackend G>
std::vector<Monomial<G>> monomials_over(const G& backend,
                                        const std::vector<typename G::element_type>& A,
                                        std::size_t n) {
  if (A.empty()) throw precondition_error("monomials_over: empty coefficient set");
  std::vector<Monomial<G>> out;
  std::unordered_set<std::string> seen;
  auto add = [&](Monomial<G> m) {
    if (seen.insert(format_monomial(m)).second) out.push_back(std::move(m));
  };
  for (const auto& a : A) add(constant_monomial(backend, a));
  std::size_t level_begin = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int e : {+1, -1}) {
        for (const auto& a : A) {
          Monomial<G> m = out[i];
          m.exps.push_back(e);
          m.coeffs.push_back(a);
          add(std::move(m));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

/// A finite family of monomials over one backend, all of degree <= the
/// stated bound.
template <GroupBackend G>
struct WitnessFamily {
  G backend;
  std::vector<Monomial<G>> monomials;
  std::size_t degree_bound = 0;

  static WitnessFamily over(const G& backend, std::vector<Monomial<G>> ms) {
    std::size_t bound = 0;
    for (const auto& m : ms) {
      if (!(m.backend == backend)) throw backend_mismatch("witness family: mixed backends");
      bound = std::max(bound, m.degree());
    }
    return {backend, std::move(ms), bound};
  }
};

/// True iff g lies in every co-zero set of the family (the empty
/// intersection is everything).
template <GroupBackend G>
bool intersection_member(const WitnessFamily<G>& W, const typename G::element_type& g) {
  for (const auto& m : W.monomials)
    if (!cozero_contains(m, g)) return false;
  return true;
}

}  // namespace zariski
