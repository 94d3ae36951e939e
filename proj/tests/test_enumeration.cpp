#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "oracle.hpp"
#include "treebalance/enumeration.hpp"
#include "treebalance/errors.hpp"
#include "treebalance/generators.hpp"

using namespace treebalance;

TEST(CountShapes, Examples) {
  EXPECT_EQ(count_shapes(1).count, 1);
  EXPECT_EQ(count_shapes(3).count, 1);
  EXPECT_EQ(count_shapes(4).count, 2);
  EXPECT_EQ(count_shapes(8).count, 23);
  EXPECT_EQ(count_shapes(10).count, 98);
  EXPECT_EQ(count_shapes(12).count, 451);
  EXPECT_EQ(count_shapes(18).count, 56011);
  EXPECT_EQ(count_shapes(18).n, 18U);
  EXPECT_THROW(count_shapes(0), InvalidInput);
}

TEST(CountShapes, MatchesIndependentRecurrence) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(count_shapes(n).count, mpz_class(std::to_string(oracle::wedderburn(n))))
        << "n=" << n;
  }
}

TEST(CountShapes, MatchesBruteForceClosure) {
  for (int n = 1; n <= 11; ++n) {
    EXPECT_EQ(count_shapes(n).count, oracle::all_shapes(n).size()) << "n=" << n;
  }
}

TEST(EnumerateShapes, Examples) {
  const auto& one = enumerate_shapes(1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_TRUE(one.front().tree.is_leaf());

  const auto& four = enumerate_shapes(4);
  ASSERT_EQ(four.size(), 2U);
  std::set<CanonicalCode> codes{four[0].code, four[1].code};
  EXPECT_TRUE(codes.contains(canonical(fully_balanced(2))));
  EXPECT_TRUE(codes.contains(canonical(caterpillar(4))));

  EXPECT_EQ(enumerate_shapes(8).size(), 23U);
}

TEST(EnumerateShapes, CompleteAndDistinct) {
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto& shapes = enumerate_shapes(n);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(shapes.size())), count_shapes(n).count);
    std::set<std::string> codes;
    for (const Shape& s : shapes) {
      EXPECT_EQ(s.tree.leaf_count(), n);
      EXPECT_EQ(s.code, canonical(s.tree));
      codes.insert(canonical(s.tree).text());
    }
    EXPECT_EQ(codes.size(), shapes.size()) << "n=" << n;
    EXPECT_TRUE(std::is_sorted(shapes.begin(), shapes.end(),
                               [](const Shape& a, const Shape& b) { return a.code < b.code; }));
  }
}

TEST(EnumerateShapes, SameSetAsOracle) {
  for (int n = 1; n <= 10; ++n) {
    std::set<std::string> mine;
    for (const Shape& s : enumerate_shapes(static_cast<std::size_t>(n))) {
      mine.insert(oracle::from_tree(s.tree));
    }
    EXPECT_EQ(mine, oracle::all_shapes(n)) << "n=" << n;
  }
}

TEST(EnumerateShapes, ContainsNamedFamilies) {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::set<CanonicalCode> codes;
    for (const Shape& s : enumerate_shapes(n)) {
      codes.insert(s.code);
    }
    EXPECT_TRUE(codes.contains(canonical(echelon(n)))) << n;
    EXPECT_TRUE(codes.contains(canonical(caterpillar(n)))) << n;
    if (std::has_single_bit(n)) {
      EXPECT_TRUE(codes.contains(
          canonical(fully_balanced(static_cast<std::size_t>(std::bit_width(n) - 1)))));
    }
  }
}

TEST(EnumerateShapes, Bounds) {
  EXPECT_THROW(enumerate_shapes(0), InvalidInput);
  EXPECT_THROW(enumerate_shapes(19), LimitExceeded);
  EXPECT_THROW(enumerate_shapes(6, 5), LimitExceeded);

  ShapeCatalog small(5);
  EXPECT_EQ(small.shapes(5).size(), 3U);
  EXPECT_THROW(small.shapes(6), LimitExceeded);
}

TEST(ShapeCatalog, ConcurrentUseGivesSameLists) {
  ShapeCatalog catalog;
  std::vector<std::size_t> sizes(8);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < sizes.size(); ++w) {
      workers.emplace_back([&, w] { sizes[w] = catalog.shapes(12 + w % 3).size(); });
    }
  }
  for (std::size_t w = 0; w < sizes.size(); ++w) {
    EXPECT_EQ(sizes[w], oracle::wedderburn(static_cast<int>(12 + w % 3)));
  }

  std::size_t visited = 0;
  catalog.for_each_shape(9, [&](const Shape&) { ++visited; });
  EXPECT_EQ(visited, 46U);
}
