#include "gibbs/compensated_sum.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

TEST(CompensatedSum, RecoversBitsLostByNaiveAddition) {
  gibbs::CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  EXPECT_NEAR(s.value(), 1.0 + 1e-13, 1e-28);
}

TEST(CompensatedSum, CancellationOfLargeTerms) {
  gibbs::CompensatedSum s;
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  EXPECT_EQ(s.value(), 1.0);
}

TEST(CompensatedComplexSum, TracksPartsIndependently) {
  gibbs::CompensatedComplexSum s;
  s.add({1.0, -1.0});
  for (int i = 0; i < 10; ++i) s.add({1e-17, 1e-17});
  EXPECT_DOUBLE_EQ(s.value().real(), 1.0 + 1e-16);
  EXPECT_DOUBLE_EQ(s.value().imag(), -1.0 + 1e-16);
}

}  // namespace
