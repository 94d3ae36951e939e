#pragma once

#include <cstddef>

#include "treebalance/rational.hpp"
#include "treebalance/tree.hpp"

namespace treebalance {

/// stairs2 index by its definition: the sum over internal vertices of
/// (smaller child leaf count) / (larger child leaf count), divided by n - 1.
/// Zero for trees with fewer than two leaves.
Rational stairs2_direct(const Tree& t);

/// stairs2 index through the root decomposition T = (T1, T2):
///   ((n1 - 1) st(T1) + (n2 - 1) st(T2) + n2 / n1) / (n1 + n2 - 1).
/// Always agrees exactly with stairs2_direct.
Rational stairs2_recursive(const Tree& t);

/// The root-decomposition step on its own, for subtrees with n1 >= n2 leaves
/// and indices st1, st2. Accepts n2 = 0 (T2 empty, st2 = 0), in which case
/// the result is st1. Throws InvalidInput if n1 < n2 or n1 + n2 < 2.
Rational combine_stairs2(std::size_t n1, const Rational& st1, std::size_t n2,
                         const Rational& st2);

}  // namespace treebalance
