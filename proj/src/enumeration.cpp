#include "treebalance/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "treebalance/errors.hpp"

namespace treebalance {

const std::vector<Shape>& ShapeCatalog::shapes(std::size_t n) {
  if (n == 0) {
    throw InvalidInput("enumerate_shapes: need at least one leaf");
  }
  if (n > bound_) {
    throw LimitExceeded("enumerate_shapes: n = " + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(bound_));
  }
  std::lock_guard lock(mutex_);
  return build_locked(n);
}

const std::vector<Shape>& ShapeCatalog::build_locked(std::size_t n) {
  if (auto it = cache_.find(n); it != cache_.end()) {
    return *it->second;
  }

  std::vector<Shape> out;
  if (n == 1) {
    out.push_back({Tree::leaf(), canonical(Tree::leaf())});
  } else {
    for (std::size_t n1 = n - 1; 2 * n1 >= n; --n1) {
      const std::size_t n2 = n - n1;
      const auto& bigger = build_locked(n1);
      const auto& smaller = build_locked(n2);
      for (std::size_t i = 0; i < bigger.size(); ++i) {
        // Equal halves: keep only pairs with code(T1) >= code(T2).
        const std::size_t limit = n1 == n2 ? i + 1 : smaller.size();
        for (std::size_t j = 0; j < limit; ++j) {
          Tree t = Tree::join(bigger[i].tree, smaller[j].tree);
          CanonicalCode code = canonical(t);
          out.push_back({std::move(t), std::move(code)});
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Shape& a, const Shape& b) { return a.code < b.code; });
  }
  auto [it, inserted] =
      cache_.emplace(n, std::make_unique<const std::vector<Shape>>(std::move(out)));
  return *it->second;
}

const std::vector<Shape>& enumerate_shapes(std::size_t n, std::size_t bound) {
  static ShapeCatalog catalog(std::numeric_limits<std::size_t>::max());
  if (n > bound) {
    throw LimitExceeded("enumerate_shapes: n = " + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(bound));
  }
  return catalog.shapes(n);
}

ShapeCount count_shapes(std::size_t n) {
  if (n == 0) {
    throw InvalidInput("count_shapes: need at least one leaf");
  }
  static std::mutex mutex;
  static std::vector<mpz_class> memo{0, 1};
  std::lock_guard lock(mutex);
  for (std::size_t m = memo.size(); m <= n; ++m) {
    mpz_class w = 0;
    for (std::size_t i = 1; 2 * i < m; ++i) {
      w += memo[i] * memo[m - i];
    }
    if (m % 2 == 0) {
      const mpz_class& half = memo[m / 2];
      w += half * (half + 1) / 2;
    }
    memo.push_back(std::move(w));
  }
  return {n, memo[n]};
}

}  // namespace treebalance
