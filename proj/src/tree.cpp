#include "treebalance/tree.hpp"

#include <algorithm>
#include <vector>

#include "treebalance/errors.hpp"

namespace treebalance {

struct Tree::Node {
  Tree left;
  Tree right;
  std::size_t leaves = 1;

  Node() = default;
  Node(Tree l, Tree r, std::size_t n) : left(std::move(l)), right(std::move(r)), leaves(n) {}
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  // Releases uniquely owned descendants with an explicit stack so that deep
  // trees (long caterpillars) do not recurse once per level.
  ~Node() {
    std::vector<std::shared_ptr<const Node>> pending;
    auto steal = [&pending](Tree& t) {
      if (t.node_ != nullptr && t.node_.use_count() == 1) {
        pending.push_back(std::move(t.node_));
      }
    };
    steal(left);
    steal(right);
    while (!pending.empty()) {
      std::shared_ptr<const Node> node = std::move(pending.back());
      pending.pop_back();
      // Nodes are always allocated non-const, see leaf() and join().
      auto& owned = const_cast<Node&>(*node);
      steal(owned.left);
      steal(owned.right);
    }
  }
};

Tree Tree::leaf() {
  static const std::shared_ptr<const Node> kLeaf = std::make_shared<Node>();
  return Tree(kLeaf);
}

Tree Tree::join(Tree left, Tree right) {
  if (left.is_empty() || right.is_empty()) {
    throw InvalidInput("Tree::join: children of an internal vertex must be non-empty");
  }
  const std::size_t leaves = left.leaf_count() + right.leaf_count();
  return Tree(std::make_shared<Node>(std::move(left), std::move(right), leaves));
}

bool Tree::is_leaf() const { return node_ != nullptr && node_->left.is_empty(); }

bool Tree::is_internal() const { return node_ != nullptr && !node_->left.is_empty(); }

std::size_t Tree::leaf_count() const { return node_ == nullptr ? 0 : node_->leaves; }

const Tree& Tree::left() const {
  if (!is_internal()) {
    throw InvalidInput("Tree::left: not an internal vertex");
  }
  return node_->left;
}

const Tree& Tree::right() const {
  if (!is_internal()) {
    throw InvalidInput("Tree::right: not an internal vertex");
  }
  return node_->right;
}

std::pair<Tree, Tree> decompose(const Tree& t) {
  if (!t.is_internal()) {
    throw InvalidInput("decompose: tree must have at least two leaves");
  }
  if (t.left().leaf_count() >= t.right().leaf_count()) {
    return {t.left(), t.right()};
  }
  return {t.right(), t.left()};
}

std::size_t height(const Tree& t) {
  if (t.is_empty()) {
    throw InvalidInput("height: empty tree has no leaves");
  }
  std::size_t best = 0;
  std::vector<std::pair<const Tree*, std::size_t>> stack{{&t, 0}};
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    if (node->is_leaf()) {
      best = std::max(best, depth);
    } else {
      stack.emplace_back(&node->left(), depth + 1);
      stack.emplace_back(&node->right(), depth + 1);
    }
  }
  return best;
}

std::size_t internal_count(const Tree& t) {
  std::size_t count = 0;
  std::vector<const Tree*> stack;
  if (t.is_internal()) {
    stack.push_back(&t);
  }
  while (!stack.empty()) {
    const Tree* node = stack.back();
    stack.pop_back();
    ++count;
    for (const Tree* child : {&node->left(), &node->right()}) {
      if (child->is_internal()) {
        stack.push_back(child);
      }
    }
  }
  return count;
}

namespace {

void append_code(const Tree& root, std::string& out) {
  // A null tree stands for a pending ')'.
  std::vector<const Tree*> stack{&root};
  while (!stack.empty()) {
    const Tree* t = stack.back();
    stack.pop_back();
    if (t == nullptr) {
      out += ')';
      continue;
    }
    if (t->is_empty()) {
      continue;
    }
    if (t->is_leaf()) {
      out += "()";
      continue;
    }
    const Tree* a = &t->left();
    const Tree* b = &t->right();
    out += '(';
    if (a->leaf_count() == b->leaf_count() && !a->shares_root_with(*b)) {
      // Equal sizes need the codes themselves to pick the order. Each vertex
      // sits below at most log2(n) such splits, so this stays O(n log n).
      std::string ca;
      std::string cb;
      append_code(*a, ca);
      append_code(*b, cb);
      out += std::min(ca, cb);
      out += std::max(ca, cb);
      out += ')';
      continue;
    }
    if (b->leaf_count() > a->leaf_count()) {
      std::swap(a, b);
    }
    stack.push_back(nullptr);
    stack.push_back(b);
    stack.push_back(a);
  }
}

std::string code_text(const Tree& t) {
  std::string out;
  append_code(t, out);
  return out;
}

}  // namespace

CanonicalCode canonical(const Tree& t) { return {t.leaf_count(), code_text(t)}; }

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.leaf_count() == b.leaf_count() && code_text(a) == code_text(b);
}

bool canonical_child_before(const Tree& a, const Tree& b) {
  if (a.leaf_count() != b.leaf_count()) {
    return a.leaf_count() > b.leaf_count();
  }
  if (a.shares_root_with(b)) {
    return false;
  }
  return code_text(a) < code_text(b);
}

}  // namespace treebalance
