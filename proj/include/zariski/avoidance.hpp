#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/free_group.hpp"
#include "zariski/monomial.hpp"
#include "zariski/word.hpp"

namespace zariski {

/// A subgroup in the descending centralizer chain of a free group: the
/// whole group, or the cyclic group generated by a primitive root. Those
/// are the only shapes the chain can take, since an infinite centralizer in
/// a free group is cyclic and a finite one is trivial.
struct ChainSubgroup {
  std::optional<Word> cyclic_root;  // nothing: the whole group

  bool contains(const Word& y) const {
    if (!cyclic_root) return true;
    return cyclic_subgroup_member(y, *cyclic_root);
  }
};

/// Everything derived from a family of conjugation constraints
/// b x a x^-1 c (or the x^-1 variant) over a free backend: per-member data,
/// the centralizer chain, the steps whose centralizers collapsed to the
/// trivial group, and a solution-coset representative per excluded
/// conjugation target.
struct AvoidanceContext {
  struct Constraint {
    std::size_t a_index = 0;
    bool inverted = false;  // the b x^-1 a x c shape
    Word b, c, d;           // d = b^-1 c^-1, the excluded conjugation value
  };

  struct CosetDescriptor {
    std::size_t a_index = 0;
    Word d;
    std::optional<Word> representative;  // a particular solution of y a y^-1 = d, if any
  };

  FreeGroup backend{2};
  std::vector<Word> a_list;
  std::vector<Constraint> constraints;
  std::vector<ChainSubgroup> chain;          // chain[0] is the whole group
  std::vector<std::size_t> collapsed_steps;  // indices into a_list, ascending
  std::vector<CosetDescriptor> cosets;       // one per (collapsed step, excluded value)
};

/// Builds the avoidance context. The monomials must have the stated
/// conjugation shape with the middle coefficient drawn from a_list, and the
/// identity must lie in every co-zero set (no a equals its excluded value).
inline AvoidanceContext build_avoidance_context(const FreeGroup& backend,
                                                const std::vector<Word>& a_list,
                                                const WitnessFamily<FreeGroup>& V) {
  if (a_list.empty()) throw precondition_error("avoidance: empty a-list");
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    backend.validate(a_list[i]);
    for (std::size_t j = i + 1; j < a_list.size(); ++j)
      if (a_list[i] == a_list[j]) throw precondition_error("avoidance: a-list entries must be distinct");
  }
  if (!(V.backend == backend)) throw backend_mismatch("avoidance: family backend differs");

  AvoidanceContext ctx;
  ctx.backend = backend;
  ctx.a_list = a_list;

  for (const auto& m : V.monomials) {
    if (m.degree() != 2 || m.exps[0] == m.exps[1])
      throw precondition_error("avoidance: family member is not a conjugation constraint");
    AvoidanceContext::Constraint c;
    c.inverted = m.exps[0] < 0;
    c.b = m.coeffs[0];
    c.c = m.coeffs[2];
    c.d = mul(inv(c.b), inv(c.c));
    const Word& a = m.coeffs[1];
    bool found = false;
    for (std::size_t i = 0; i < a_list.size() && !found; ++i)
      if (a_list[i] == a) {
        c.a_index = i;
        found = true;
      }
    if (!found) throw precondition_error("avoidance: middle coefficient not in the a-list");
    if (a_list[c.a_index] == c.d)
      throw precondition_error("avoidance: a member vanishes at the identity");
    ctx.constraints.push_back(std::move(c));
  }

  // Descending centralizer chain. A step whose centralizer degenerates to
  // the trivial group keeps the previous subgroup and is recorded; an
  // infinite centralizer becomes the next subgroup.
  ctx.chain.push_back({});  // the whole group
  for (std::size_t k = 0; k < a_list.size(); ++k) {
    ChainSubgroup cur = ctx.chain.back();
    const Word& a = a_list[k];
    if (!cur.cyclic_root) {
      if (a.is_identity()) {
        ctx.chain.push_back(cur);  // everything commutes with 1
      } else {
        ctx.chain.push_back({word_root(a).first});
      }
    } else {
      if (a.is_identity() || commutes(a, *cur.cyclic_root)) {
        ctx.chain.push_back(cur);
      } else {
        ctx.collapsed_steps.push_back(k);
        ctx.chain.push_back(cur);
      }
    }
  }

  // Excluded conjugation values per collapsed step, deduplicated in family
  // order, each with its solution-coset representative when solvable.
  for (std::size_t k : ctx.collapsed_steps) {
    std::unordered_set<std::string> seen;
    for (const auto& c : ctx.constraints) {
      if (c.a_index != k) continue;
      if (!seen.insert(backend.format_element(c.d)).second) continue;
      ctx.cosets.push_back({k, c.d, conjugacy_solve(a_list[k], c.d)});
    }
  }
  return ctx;
}

/// Membership in the avoidance set: y lies in the final chain subgroup and
/// conjugates no collapsed-step a onto its excluded value in either
/// direction. Members evaluate every family constraint away from the
/// identity, and the set is closed under inversion.
inline bool avoidance_member(const AvoidanceContext& ctx, const Word& y) {
  ctx.backend.validate(y);
  if (!ctx.chain.back().contains(y)) return false;
  Word yi = inv(y);
  for (const auto& coset : ctx.cosets) {
    const Word& a = ctx.a_list[coset.a_index];
    if (mul(mul(y, a), yi) == coset.d) return false;
    if (mul(mul(yi, a), y) == coset.d) return false;
  }
  return true;
}

/// The first `count` members of the avoidance set along the canonical
/// order: the backend enumeration when the final subgroup is everything,
/// powers of the root (0, 1, -1, 2, -2, ...) when it is cyclic.
inline std::vector<Word> avoidance_members(const AvoidanceContext& ctx, std::size_t count,
                                           std::uint64_t budget) {
  std::vector<Word> out;
  const ChainSubgroup& last = ctx.chain.back();
  if (!last.cyclic_root) {
    auto en = ctx.backend.enumerator();
    for (std::uint64_t step = 0; step < budget && out.size() < count; ++step) {
      Word y = *en.next();
      if (avoidance_member(ctx, y)) out.push_back(y);
    }
  } else {
    const Word& r = *last.cyclic_root;
    for (std::uint64_t step = 0; step < budget && out.size() < count; ++step) {
      std::int64_t m = step == 0 ? 0
                                 : (step % 2 == 1 ? static_cast<std::int64_t>((step + 1) / 2)
                                                  : -static_cast<std::int64_t>(step / 2));
      Word y = pow(r, m);
      if (avoidance_member(ctx, y)) out.push_back(y);
    }
  }
  if (out.size() < count) throw budget_exhausted("avoidance: too few members within budget");
  return out;
}

/// Finds `count` elements whose conjugation action moves no element of A
/// into B, scanning the canonical enumeration and verifying each hit
/// directly. A and B must be finite, nonempty, and disjoint.
template <GroupBackend G>
std::vector<typename G::element_type> find_avoiders(const G& b,
                                                    const std::vector<typename G::element_type>& A,
                                                    const std::vector<typename G::element_type>& B,
                                                    std::size_t count, std::uint64_t budget) {
  if (A.empty() || B.empty()) throw precondition_error("avoiders: both sets must be nonempty");
  for (const auto& a : A)
    for (const auto& bb : B)
      if (b.eq(a, bb)) throw precondition_error("avoiders: the sets must be disjoint");
  std::vector<typename G::element_type> out;
  auto en = b.enumerator();
  for (std::uint64_t step = 0; step < budget && out.size() < count; ++step) {
    auto x = en.next();
    if (!x) break;
    bool good = true;
    auto xi = b.inv(*x);
    for (const auto& a : A) {
      auto conj = b.mul(b.mul(*x, a), xi);
      for (const auto& bb : B)
        if (b.eq(conj, bb)) {
          good = false;
          break;
        }
      if (!good) break;
    }
    if (good) out.push_back(*x);
  }
  if (out.size() < count) throw budget_exhausted("avoiders: too few found within budget");
  return out;
}

}  // namespace zariski
