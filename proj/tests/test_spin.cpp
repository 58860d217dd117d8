#include <gtest/gtest.h>

#include "poincare/spin.hpp"

using namespace poincare;

TEST(Spin, LabelsDescend) {
  const auto labels = Spin::from_twice(3).labels();
  ASSERT_EQ(labels.size(), 4u);
  EXPECT_EQ(labels.front(), HalfInt::from_twice(3));
  EXPECT_EQ(labels.back(), HalfInt::from_twice(-3));
  EXPECT_EQ(HalfInt::from_twice(3).to_string(), "3/2");
  EXPECT_EQ(HalfInt::from_twice(-2).to_string(), "-1");
  EXPECT_THROW(Spin::from_twice(-1), std::invalid_argument);
}

TEST(Spin, Contains) {
  const Spin one = Spin::from_twice(2);
  EXPECT_TRUE(one.contains(HalfInt::from_int(0)));
  EXPECT_FALSE(one.contains(kHalf));
  EXPECT_FALSE(one.contains(HalfInt::from_int(2)));
}

TEST(Spin, FlattenIndexIsABijection) {
  const SpinPair pair{Spin::from_twice(3), Spin::from_twice(2)};
  EXPECT_EQ(pair.dimension(), 12u);
  std::vector<bool> seen(pair.dimension());
  std::size_t expected = 0;
  for (HalfInt a : pair.left.labels()) {
    for (HalfInt b : pair.right.labels()) {
      const std::size_t k = flatten_index(pair, a, b);
      EXPECT_EQ(k, expected++);
      seen[k] = true;
    }
  }
  EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 12);
  EXPECT_THROW(flatten_index(pair, HalfInt::from_twice(5), HalfInt::from_int(0)), std::out_of_range);
}
