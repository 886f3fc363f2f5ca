#include <gtest/gtest.h>

#include "properties.hpp"

using relsat::testing::PropertyResult;


TEST(Properties, AllHoldOnRandomInputs) {
  for (const PropertyResult& r : relsat::testing::allProperties(20260101, 200)) {
    EXPECT_TRUE(r.passed()) << r.name << ": worst " << r.worst << " > bound " << r.bound;
    EXPECT_GT(r.cases, 0) << r.name;
  }
}

TEST(Properties, IndependentSeedsAlsoHold) {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    for (const PropertyResult& r : relsat::testing::allProperties(seed, 50)) {
      EXPECT_TRUE(r.passed()) << r.name << " seed " << seed << ": " << r.worst;
    }
  }
}
