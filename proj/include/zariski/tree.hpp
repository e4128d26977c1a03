#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/word.hpp"

namespace zariski {

/// A node of the infinite rooted binary tree, heap-coded: the root is 0 and
/// the children of node i are 2i+1 (bit 0) and 2i+2 (bit 1). Numeric order
/// on indices coincides with the canonical node order (depth first, then
/// lexicographic with 0 < 1), which is what every tie-break below relies on.
struct TreeNode {
  std::uint64_t idx = 0;

  static TreeNode root() { return {}; }

  TreeNode child(int bit) const { return {2 * idx + 1 + static_cast<std::uint64_t>(bit)}; }

  std::optional<TreeNode> parent() const {
    if (idx == 0) return std::nullopt;
    return TreeNode{(idx - 1) / 2};
  }

  int depth() const { return std::bit_width(idx + 1) - 1; }

  std::vector<int> path() const {
    std::vector<int> bits;
    std::uint64_t p = idx;
    while (p != 0) {
      bits.push_back(static_cast<int>((p - 1) & 1));
      p = (p - 1) / 2;
    }
    std::reverse(bits.begin(), bits.end());
    return bits;
  }

  static TreeNode from_path(std::span<const int> bits) {
    TreeNode t;
    for (int b : bits) t = t.child(b);
    return t;
  }

  friend auto operator<=>(const TreeNode&, const TreeNode&) = default;
};

inline std::string format_node_bits(TreeNode t) {
  std::string s;
  for (int b : t.path()) s += static_cast<char>('0' + b);
  return s;
}

inline TreeNode parse_node_bits(std::string_view bits) {
  if (bits.size() > 60) throw parse_error("tree node deeper than supported");
  TreeNode t;
  for (char c : bits) {
    if (c != '0' && c != '1') throw parse_error("tree node: bits must be 0 or 1");
    t = t.child(c - '0');
  }
  return t;
}

/// A finitary automorphism of the binary tree, stored as its portrait: the
/// finite set of nodes whose subtree children are swapped. The label at a
/// node acts on the next bit of any path passing through it, so the image of
/// a path flips bit i exactly when the length-(i-1) source prefix is
/// labeled. The empty portrait is the identity.
class TreeAut {
 public:
  TreeAut() = default;

  static TreeAut identity() { return {}; }

  static TreeAut from_labels(std::vector<TreeNode> labels) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw precondition_error("tree automorphism: duplicate label");
    TreeAut f;
    f.labels_ = std::move(labels);
    return f;
  }

  bool is_identity() const { return labels_.empty(); }

  bool label(TreeNode t) const { return std::binary_search(labels_.begin(), labels_.end(), t); }

  const std::vector<TreeNode>& labels() const { return labels_; }

  friend bool operator==(const TreeAut&, const TreeAut&) = default;

 private:
  std::vector<TreeNode> labels_;
};

inline TreeNode aut_apply(const TreeAut& f, TreeNode t) {
  TreeNode src = TreeNode::root();
  TreeNode dst = TreeNode::root();
  for (int b : t.path()) {
    dst = dst.child(b ^ static_cast<int>(f.label(src)));
    src = src.child(b);
  }
  return dst;
}

/// Composition acting as (f o g)(t) = f(g(t)). The portrait reads
/// label(s) = label_g(s) XOR label_f(g(s)), so the support stays finite.
inline TreeAut aut_compose(const TreeAut& f, const TreeAut& g) {
  std::vector<TreeNode> candidates = g.labels();
  for (TreeNode p : f.labels()) {
    // g^-1(p): undo the action bit by bit, reading labels at the source
    // prefix as it is rebuilt
    TreeNode src = TreeNode::root();
    for (int b : p.path()) src = src.child(b ^ static_cast<int>(g.label(src)));
    candidates.push_back(src);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<TreeNode> labels;
  for (TreeNode s : candidates)
    if (g.label(s) != f.label(aut_apply(g, s))) labels.push_back(s);
  return TreeAut::from_labels(std::move(labels));
}

inline TreeAut aut_inverse(const TreeAut& f) {
  std::vector<TreeNode> labels;
  labels.reserve(f.labels().size());
  for (TreeNode p : f.labels()) labels.push_back(aut_apply(f, p));
  return TreeAut::from_labels(std::move(labels));
}

/// The canonically minimal labeled node, or nothing for the identity. When
/// p is returned, f fixes p and swaps its two children, so p.child(0) is a
/// moved node of minimal depth.
inline std::optional<TreeNode> minimal_labeled_node(const TreeAut& f) {
  if (f.is_identity()) return std::nullopt;
  return f.labels().front();
}

/// The induced automorphism of the free group over the tree's nodes:
/// generator t is renamed to f(t), exponents kept. Renaming along a
/// bijection preserves reducedness.
inline Word act_word(const TreeAut& f, const Word& w) {
  std::vector<Letter> runs;
  runs.reserve(w.runs().size());
  for (const Letter& l : w.runs()) runs.push_back({aut_apply(f, TreeNode{l.gen}).idx, l.exp});
  return Word::from_reduced(std::move(runs));
}

inline std::string format_aut(const TreeAut& f) {
  if (f.is_identity()) return "id";
  std::string s = "swap{";
  bool first = true;
  for (TreeNode t : f.labels()) {
    if (!first) s += ',';
    first = false;
    s += '[';
    s += format_node_bits(t);
    s += ']';
  }
  s += '}';
  return s;
}

inline TreeAut parse_aut(std::string_view text) {
  auto strip = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = strip(text);
  if (text == "id") return TreeAut::identity();
  if (!text.starts_with("swap{") || !text.ends_with("}"))
    throw parse_error("automorphism literal: expected \"id\" or \"swap{...}\"");
  std::string_view body = text.substr(5, text.size() - 6);
  std::vector<TreeNode> labels;
  while (!body.empty()) {
    std::size_t comma = body.find(',');
    std::string_view item = strip(comma == std::string_view::npos ? body : body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (!item.starts_with("[") || !item.ends_with("]"))
      throw parse_error("automorphism literal: node must look like [bits]");
    labels.push_back(parse_node_bits(item.substr(1, item.size() - 2)));
  }
  if (labels.empty()) throw parse_error("automorphism literal: empty swap set");
  return TreeAut::from_labels(std::move(labels));
}

}  // namespace zariski
