#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/text.hpp"

namespace zariski {

class AbelianEnumerator;

/// An element of a direct sum of cyclic groups: a finite-support exponent
/// vector, stored sparse and sorted by generator index. Exponents are
/// canonical for the owning group's moduli (nonzero; in 1..m-1 for a finite
/// summand of order m).
class AbelianElement {
 public:
  AbelianElement() = default;

  const std::vector<std::pair<std::uint64_t, std::int64_t>>& exps() const { return exps_; }
  bool is_identity() const { return exps_.empty(); }

  std::uint64_t weight() const {
    std::uint64_t s = 0;
    for (auto [i, e] : exps_) s += static_cast<std::uint64_t>(e < 0 ? -e : e);
    return s;
  }

  std::uint64_t max_index() const {  // identity -> 0
    return exps_.empty() ? 0 : exps_.back().first;
  }

  friend bool operator==(const AbelianElement&, const AbelianElement&) = default;

 private:
  friend class AbelianGroup;
  std::vector<std::pair<std::uint64_t, std::int64_t>> exps_;
};

/// A direct sum of cyclic groups, one summand per generator index. Each
/// modulus is 0 for an infinite cyclic summand or at least 2; the rank is a
/// finite list of moduli or countably many infinite cyclic summands.
class AbelianGroup {
 public:
  using element_type = AbelianElement;
  using enumerator_type = AbelianEnumerator;

  explicit AbelianGroup(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_->empty()) throw precondition_error("abelian backend: empty moduli list");
    for (std::uint64_t m : *moduli_)
      if (m == 1) throw precondition_error("abelian backend: modulus must be 0 or >= 2");
  }

  /// k infinite cyclic summands.
  static AbelianGroup free_abelian(std::uint64_t rank) {
    return AbelianGroup(std::vector<std::uint64_t>(rank, 0));
  }

  static AbelianGroup infinite_rank() { return AbelianGroup(infinite_tag{}); }

  bool has_infinite_rank() const { return !moduli_.has_value(); }

  std::optional<std::uint64_t> rank() const {
    if (!moduli_) return std::nullopt;
    return moduli_->size();
  }

  std::uint64_t modulus(std::uint64_t index) const {
    if (!moduli_) return 0;
    if (index >= moduli_->size()) throw backend_mismatch("abelian backend: generator index out of range");
    return (*moduli_)[index];
  }

  /// Total group size when finite (all summands finite), otherwise nothing.
  std::optional<std::uint64_t> size() const {
    if (!moduli_) return std::nullopt;
    std::uint64_t n = 1;
    for (std::uint64_t m : *moduli_) {
      if (m == 0) return std::nullopt;
      n *= m;
    }
    return n;
  }

  AbelianElement identity() const { return {}; }

  /// Canonicalizes a raw exponent list into an element of this group.
  AbelianElement make(std::vector<std::pair<std::uint64_t, std::int64_t>> raw) const {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    AbelianElement out;
    for (auto [i, e] : raw) {
      if (!out.exps_.empty() && out.exps_.back().first == i)
        out.exps_.back().second += e;
      else
        out.exps_.push_back({i, e});
    }
    std::vector<std::pair<std::uint64_t, std::int64_t>> canon;
    for (auto [i, e] : out.exps_) {
      std::uint64_t m = modulus(i);
      if (m != 0) {
        std::int64_t mm = static_cast<std::int64_t>(m);
        e = ((e % mm) + mm) % mm;
      }
      if (e != 0) canon.push_back({i, e});
    }
    out.exps_ = std::move(canon);
    return out;
  }

  AbelianElement gen(std::uint64_t index) const { return make({{index, 1}}); }

  void validate(const AbelianElement& a) const {
    if (moduli_ && !a.exps_.empty() && a.exps_.back().first >= moduli_->size())
      throw backend_mismatch("abelian backend: element uses out-of-range generator");
  }

  AbelianElement mul(const AbelianElement& a, const AbelianElement& b) const {
    validate(a);
    validate(b);
    std::vector<std::pair<std::uint64_t, std::int64_t>> raw = a.exps_;
    raw.insert(raw.end(), b.exps_.begin(), b.exps_.end());
    return make(std::move(raw));
  }

  AbelianElement inv(const AbelianElement& a) const {
    validate(a);
    std::vector<std::pair<std::uint64_t, std::int64_t>> raw;
    raw.reserve(a.exps_.size());
    for (auto [i, e] : a.exps_) raw.push_back({i, -e});
    return make(std::move(raw));
  }

  AbelianElement pow(const AbelianElement& a, std::int64_t k) const {
    std::vector<std::pair<std::uint64_t, std::int64_t>> raw;
    raw.reserve(a.exps_.size());
    for (auto [i, e] : a.exps_) raw.push_back({i, e * k});
    return make(std::move(raw));
  }

  bool eq(const AbelianElement& a, const AbelianElement& b) const { return a == b; }
  bool is_identity(const AbelianElement& a) const { return a.is_identity(); }

  AbelianEnumerator enumerator() const;  // defined with the enumerator

  std::string format_element(const AbelianElement& a) const {
    if (a.is_identity()) return "1";
    std::string s;
    for (auto [i, e] : a.exps()) {
      if (!s.empty()) s += ' ';
      s += 'e';
      s += std::to_string(i);
      if (e != 1) {
        s += '^';
        s += std::to_string(e);
      }
    }
    return s;
  }

  AbelianElement parse_element(std::string_view text) const {
    std::vector<std::pair<std::uint64_t, std::int64_t>> raw;
    for (std::string_view tok : detail::split_factors(text)) {
      if (tok == "1") continue;
      auto [name, exp] = detail::split_term(tok);
      if (name.size() < 2 || name[0] != 'e')
        throw parse_error("abelian backend: unknown generator \"" + std::string(tok) + "\"");
      std::uint64_t index = detail::parse_nat(name.substr(1));
      if (moduli_ && index >= moduli_->size())
        throw parse_error("abelian backend: generator index " + std::to_string(index) +
                          " exceeds rank " + std::to_string(moduli_->size()));
      raw.push_back({index, exp});
    }
    return make(std::move(raw));
  }

  std::string descriptor() const {
    if (!moduli_) return "abelian:w";
    std::string s = "abelian:[";
    for (std::size_t i = 0; i < moduli_->size(); ++i) {
      if (i) s += ',';
      s += std::to_string((*moduli_)[i]);
    }
    s += ']';
    return s;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  struct infinite_tag {};
  explicit AbelianGroup(infinite_tag) {}

  std::optional<std::vector<std::uint64_t>> moduli_;  // nullopt: omega copies of Z
};

}  // namespace zariski
