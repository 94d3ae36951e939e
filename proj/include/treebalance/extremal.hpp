#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "treebalance/enumeration.hpp"
#include "treebalance/rational.hpp"
#include "treebalance/tree.hpp"

namespace treebalance {

/// Memo of st*(n), the largest stairs2 value over all trees on n leaves,
/// filled by the recursion
///   st*(n) = ((k - 1) + (n - k - 1) st*(n - k) + (n - k) / k) / (n - 1)
/// with k = 2^floor(log2 n), and st*(0) = st*(1) = 0. Safe for concurrent use.
class MaxValueTable {
 public:
  Rational operator()(std::size_t n);

 private:
  std::mutex mutex_;
  std::map<std::size_t, Rational> memo_;
};

/// st*(n) by the top-bit recursion, memoized in a process-wide table.
Rational max_value_recursive(std::size_t n);

/// st*(n) from the binary expansion n = 2^a1 + ... + 2^al (a1 < ... < al):
///   (sum_i (2^ai - 1) + sum_{i<l} (2^a1 + ... + 2^ai) / 2^a(i+1)) / (n - 1).
Rational max_value_closed(std::size_t n);

/// st*(n) for even n >= 2 through the leaf-to-cherry doubling
///   st*(2m) = ((m - 1) st*(m) + m) / (2m - 1).
/// Throws InvalidInput for odd n or n < 2.
Rational max_value_even_recursion(std::size_t n);

struct ExtremalReport {
  std::size_t n = 0;
  std::size_t shape_count = 0;
  Rational max_value;
  Rational min_value;
  std::vector<CanonicalCode> max_witnesses;  // sorted
  std::vector<CanonicalCode> min_witnesses;  // sorted
  bool max_unique_and_is_echelon = false;
  bool min_unique_and_is_caterpillar = false;
  // Both root subtrees of every maximizer are maximizers for their sizes.
  bool subtree_maximality_holds = false;

  bool all_hold() const {
    return max_unique_and_is_echelon && min_unique_and_is_caterpillar &&
           subtree_maximality_holds;
  }
};

struct VerifyOptions {
  std::size_t bound = kDefaultEnumerationBound;
  unsigned jobs = 1;
};

/// Exhaustive check over every shape on n leaves: locates all maximizers and
/// minimizers of stairs2 by exact comparison. The report does not depend on
/// options.jobs. Throws InvalidInput for n < 2, LimitExceeded for
/// n > options.bound.
ExtremalReport verify_extremal(std::size_t n, const VerifyOptions& options = {});

}  // namespace treebalance
