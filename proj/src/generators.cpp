#include "treebalance/generators.hpp"

#include <bit>
#include <string>
#include <vector>

#include "treebalance/errors.hpp"

namespace treebalance {

Tree fully_balanced(std::size_t h, std::size_t max_height) {
  if (h > max_height) {
    throw LimitExceeded("fully_balanced: height " + std::to_string(h) +
                        " exceeds bound " + std::to_string(max_height));
  }
  Tree t = Tree::leaf();
  for (std::size_t level = 0; level < h; ++level) {
    t = Tree::join(t, t);
  }
  return t;
}

std::size_t echelon_split(std::size_t n) {
  if (n < 2) {
    throw InvalidInput("echelon_split: need n >= 2");
  }
  return std::has_single_bit(n) ? n / 2 : std::bit_floor(n);
}

Tree echelon(std::size_t n) {
  if (n == 0) {
    return Tree::empty();
  }
  // Peel off the top bits first, then assemble from the smallest remainder
  // outwards: BE(n) = (FB(log k1), (FB(log k2), ... BE(r))).
  std::size_t rest = n;
  std::vector<std::size_t> splits;
  while (rest >= 2) {
    const std::size_t k = echelon_split(rest);
    splits.push_back(k);
    rest -= k;
  }
  Tree t = rest == 1 ? Tree::leaf() : Tree::empty();
  for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
    const Tree big = fully_balanced(static_cast<std::size_t>(std::countr_zero(*it)),
                                    sizeof(std::size_t) * 8);
    t = t.is_empty() ? big : Tree::join(big, t);
  }
  return t;
}

Tree caterpillar(std::size_t n) {
  if (n == 0) {
    throw InvalidInput("caterpillar: need at least one leaf");
  }
  Tree t = Tree::leaf();
  for (std::size_t i = 1; i < n; ++i) {
    t = Tree::join(t, Tree::leaf());
  }
  return t;
}

}  // namespace treebalance
