#pragma once

#include <cstddef>

#include "treebalance/tree.hpp"

namespace treebalance {

inline constexpr std::size_t kDefaultMaxBalancedHeight = 30;

/// FB(h): 2^h leaves, every leaf at depth h. The two halves share one node.
/// Throws LimitExceeded if h > max_height.
Tree fully_balanced(std::size_t h, std::size_t max_height = kDefaultMaxBalancedHeight);

/// Binary echelon tree BE(n): (FB(log k), BE(n - k)) with k the unique power
/// of two in [n/2, n). BE(0) is Empty and BE(1) is a Leaf.
Tree echelon(std::size_t n);

/// Caterpillar on n >= 1 leaves: every internal vertex has a leaf child.
Tree caterpillar(std::size_t n);

/// Largest power of two strictly below n (n >= 2), i.e. the top bit of n
/// except at powers of two, where it is n / 2.
std::size_t echelon_split(std::size_t n);

}  // namespace treebalance
