#include "treebalance/stairs2.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "treebalance/errors.hpp"

namespace treebalance {

namespace {

Rational from_size(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

}  // namespace

Rational stairs2_direct(const Tree& t) {
  const std::size_t n = t.leaf_count();
  if (n < 2) {
    return Rational(0);
  }

  // Sum of the smaller counts, grouped by the larger count. Vertices sharing
  // a denominator add as plain integers; the lcm over distinct denominators
  // turns the whole sum into one fraction that is reduced once at the end.
  std::map<std::size_t, std::size_t> small_by_large;
  std::vector<const Tree*> stack{&t};
  while (!stack.empty()) {
    const Tree* node = stack.back();
    stack.pop_back();
    const std::size_t a = node->left().leaf_count();
    const std::size_t b = node->right().leaf_count();
    small_by_large[std::max(a, b)] += std::min(a, b);
    for (const Tree* child : {&node->left(), &node->right()}) {
      if (child->is_internal()) {
        stack.push_back(child);
      }
    }
  }

  mpz_class common = 1;
  for (const auto& [large, small] : small_by_large) {
    mpz_lcm_ui(common.get_mpz_t(), common.get_mpz_t(), large);
  }
  mpz_class numerator = 0;
  for (const auto& [large, small] : small_by_large) {
    numerator += mpz_class(common / static_cast<unsigned long>(large)) *
                 static_cast<unsigned long>(small);
  }
  return Rational(numerator, mpz_class(common * static_cast<unsigned long>(n - 1)));
}

Rational combine_stairs2(std::size_t n1, const Rational& st1, std::size_t n2,
                         const Rational& st2) {
  if (n1 < n2 || n1 + n2 < 2) {
    throw InvalidInput("combine_stairs2: need n1 >= n2 and n1 + n2 >= 2");
  }
  // (n2 - 1) is -1 for an empty second subtree; st2 is 0 there.
  const Rational weighted = from_size(n1 - 1) * st1 +
                            (from_size(n2) - Rational(1)) * st2 +
                            from_size(n2) / from_size(n1);
  return weighted / from_size(n1 + n2 - 1);
}

Rational stairs2_recursive(const Tree& t) {
  if (t.leaf_count() < 2) {
    return Rational(0);
  }
  // Post-order over the decomposition; `values` holds finished subtrees.
  struct Frame {
    const Tree* tree;
    bool expanded;
  };
  std::vector<Frame> stack{{&t, false}};
  std::vector<Rational> values;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (frame.tree->leaf_count() < 2) {
      values.emplace_back(0);
      stack.pop_back();
      continue;
    }
    if (!frame.expanded) {
      frame.expanded = true;
      const Tree* first = &frame.tree->left();
      const Tree* second = &frame.tree->right();
      if (first->leaf_count() < second->leaf_count()) {
        std::swap(first, second);
      }
      stack.push_back({second, false});
      stack.push_back({first, false});
      continue;
    }
    const auto [big, small] = decompose(*frame.tree);
    const Rational st_big = std::move(values[values.size() - 2]);
    const Rational st_small = std::move(values.back());
    values.pop_back();
    values.back() = combine_stairs2(big.leaf_count(), st_big, small.leaf_count(), st_small);
    stack.pop_back();
  }
  return values.back();
}

}  // namespace treebalance
