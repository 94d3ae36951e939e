#include "treebalance/extremal.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "treebalance/errors.hpp"
#include "treebalance/generators.hpp"
#include "treebalance/stairs2.hpp"

namespace treebalance {

namespace {

Rational from_size(std::size_t v) {
  return Rational(mpz_class(static_cast<unsigned long>(v)), mpz_class(1));
}

}  // namespace

Rational MaxValueTable::operator()(std::size_t n) {
  if (n < 2) {
    return Rational(0);
  }
  std::lock_guard lock(mutex_);
  // The chain n -> n - k -> ... strictly shrinks; fill it from the bottom.
  std::vector<std::size_t> chain;
  for (std::size_t m = n; m >= 2 && !memo_.contains(m); m -= std::bit_floor(m)) {
    chain.push_back(m);
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const std::size_t m = *it;
    const std::size_t k = std::bit_floor(m);
    const std::size_t rest = m - k;
    Rational below(0);
    if (rest >= 2) {
      below = memo_.at(rest);
    }
    // (rest - 1) is -1 when rest = 0; st*(0) = 0 there.
    Rational sum = from_size(k - 1) + (from_size(rest) - Rational(1)) * below +
                   from_size(rest) / from_size(k);
    memo_.emplace(m, sum / from_size(m - 1));
  }
  return memo_.at(n);
}

Rational max_value_recursive(std::size_t n) {
  static MaxValueTable table;
  return table(n);
}

Rational max_value_closed(std::size_t n) {
  if (n < 2) {
    return Rational(0);
  }
  std::vector<unsigned> exponents;
  for (unsigned bit = 0; bit < sizeof(std::size_t) * 8; ++bit) {
    if ((n >> bit) & 1U) {
      exponents.push_back(bit);
    }
  }
  auto power = [](unsigned e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
  };

  Rational total(0);
  for (unsigned a : exponents) {
    total += Rational(power(a) - 1, mpz_class(1));
  }
  mpz_class prefix = 0;
  for (std::size_t i = 0; i + 1 < exponents.size(); ++i) {
    prefix += power(exponents[i]);
    total += Rational(prefix, power(exponents[i + 1]));
  }
  return total / from_size(n - 1);
}

Rational max_value_even_recursion(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidInput("max_value_even_recursion: n must be even and >= 2, got " +
                       std::to_string(n));
  }
  const std::size_t half = n / 2;
  return ((from_size(half) - Rational(1)) * max_value_recursive(half) + from_size(half)) /
         from_size(n - 1);
}

ExtremalReport verify_extremal(std::size_t n, const VerifyOptions& options) {
  if (n < 2) {
    throw InvalidInput("verify_extremal: need n >= 2");
  }
  if (n > options.bound) {
    throw LimitExceeded("verify_extremal: n = " + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(options.bound));
  }
  const std::vector<Shape>& shapes = enumerate_shapes(n, options.bound);

  std::vector<Rational> values(shapes.size());
  const std::size_t jobs =
      std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(shapes.size(), 1));
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < shapes.size(); i += jobs) {
          values[i] = stairs2_direct(shapes[i].tree);
        }
      });
    }
  }

  ExtremalReport report;
  report.n = n;
  report.shape_count = shapes.size();
  report.max_value = *std::max_element(values.begin(), values.end());
  report.min_value = *std::min_element(values.begin(), values.end());

  std::vector<const Tree*> maximizers;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (values[i] == report.max_value) {
      report.max_witnesses.push_back(shapes[i].code);
      maximizers.push_back(&shapes[i].tree);
    }
    if (values[i] == report.min_value) {
      report.min_witnesses.push_back(shapes[i].code);
    }
  }
  std::sort(report.max_witnesses.begin(), report.max_witnesses.end());
  std::sort(report.min_witnesses.begin(), report.min_witnesses.end());

  report.max_unique_and_is_echelon =
      report.max_witnesses.size() == 1 && report.max_witnesses.front() == canonical(echelon(n));
  report.min_unique_and_is_caterpillar =
      report.min_witnesses.size() == 1 &&
      report.min_witnesses.front() == canonical(caterpillar(n));

  report.subtree_maximality_holds = std::all_of(
      maximizers.begin(), maximizers.end(), [](const Tree* t) {
        const auto [big, small] = decompose(*t);
        return stairs2_direct(big) == max_value_recursive(big.leaf_count()) &&
               stairs2_direct(small) == max_value_recursive(small.leaf_count());
      });
  return report;
}

}  // namespace treebalance
