#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "treebalance/tree.hpp"

namespace treebalance {

inline constexpr std::size_t kDefaultEnumerationBound = 18;

struct Shape {
  Tree tree;
  CanonicalCode code;
};

/// Cache of all rooted binary tree shapes per leaf count.
///
/// shapes(n) holds exactly one representative per isomorphism class, sorted
/// by canonical code. Lists are built from the cached lists of smaller sizes
/// and never change afterwards; the catalog is safe to use from several
/// threads.
class ShapeCatalog {
 public:
  explicit ShapeCatalog(std::size_t bound = kDefaultEnumerationBound) : bound_(bound) {}

  std::size_t bound() const { return bound_; }

  /// Throws InvalidInput for n = 0, LimitExceeded for n > bound().
  const std::vector<Shape>& shapes(std::size_t n);

  template <typename Visitor>
  void for_each_shape(std::size_t n, Visitor&& visit) {
    for (const Shape& s : shapes(n)) {
      visit(s);
    }
  }

 private:
  const std::vector<Shape>& build_locked(std::size_t n);

  std::size_t bound_;
  std::mutex mutex_;
  std::map<std::size_t, std::unique_ptr<const std::vector<Shape>>> cache_;
};

/// All shapes on n leaves, from a process-wide catalog.
const std::vector<Shape>& enumerate_shapes(std::size_t n,
                                           std::size_t bound = kDefaultEnumerationBound);

struct ShapeCount {
  std::size_t n = 0;
  mpz_class count;
};

/// Wedderburn-Etherington number w(n), by its recurrence (no trees built).
/// Throws InvalidInput for n = 0.
ShapeCount count_shapes(std::size_t n);

}  // namespace treebalance
