#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>

namespace treebalance {

/// Immutable rooted binary tree shape.
///
/// A tree is either Empty (zero leaves), a Leaf, or an internal vertex with
/// exactly two non-empty children. Subtree leaf counts are cached when a node
/// is built, and nodes are shared by reference between trees, so copying a
/// Tree is O(1) and trees are safe to share across threads.
///
/// Child order is stored (Newick I/O needs it), but every shape-level
/// operation in this library treats children as unordered.
class Tree {
 public:
  /// The empty tree.
  Tree() = default;

  static Tree empty() { return Tree(); }
  static Tree leaf();
  /// Internal vertex over two non-empty subtrees. Throws InvalidInput if
  /// either side is Empty.
  static Tree join(Tree left, Tree right);

  bool is_empty() const { return node_ == nullptr; }
  bool is_leaf() const;
  bool is_internal() const;

  std::size_t leaf_count() const;

  /// Children in stored order. Throws InvalidInput unless internal.
  const Tree& left() const;
  const Tree& right() const;

  /// True when both trees are the same stored node (hence isomorphic).
  bool shares_root_with(const Tree& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Total-order encoding of a tree shape; two trees have equal codes exactly
/// when they are isomorphic with children unordered.
///
/// The text is a balanced-parenthesis word: a leaf is "()", an internal
/// vertex is "(" + code(first) + code(second) + ")" with the children sorted
/// by leaf count descending, then by code text ascending. Empty is "".
class CanonicalCode {
 public:
  CanonicalCode() = default;
  CanonicalCode(std::size_t leaf_count, std::string text)
      : leaf_count_(leaf_count), text_(std::move(text)) {}

  std::size_t leaf_count() const { return leaf_count_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a,
                                          const CanonicalCode& b) {
    if (auto c = a.leaf_count_ <=> b.leaf_count_; c != 0) {
      return c;
    }
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  std::size_t leaf_count_ = 0;
  std::string text_;
};

/// Splits an internal tree into its two maximal pending subtrees, larger
/// one first. Throws InvalidInput on Leaf or Empty.
std::pair<Tree, Tree> decompose(const Tree& t);

/// Maximum leaf depth. Throws InvalidInput on Empty.
std::size_t height(const Tree& t);

/// Number of internal vertices.
std::size_t internal_count(const Tree& t);

CanonicalCode canonical(const Tree& t);

bool is_isomorphic(const Tree& a, const Tree& b);

/// True when `a` precedes `b` in the child order used by canonical codes
/// (leaf count descending, then code text ascending).
bool canonical_child_before(const Tree& a, const Tree& b);

}  // namespace treebalance
