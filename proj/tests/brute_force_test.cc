#include "fleetbound/brute_force.h"

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"

namespace fleetbound {
namespace {

Instance Make(int64_t q, std::vector<int64_t> capacities, int64_t delta) {
  return *Instance::WithTotalDemand(q, std::move(capacities), delta);
}

TEST(BruteForceSingleDepotTest, KnownValues) {
  EXPECT_EQ(*BruteForceSingleDepot(0, 4), 0);
  EXPECT_EQ(*BruteForceSingleDepot(3, 4), 1);
  EXPECT_EQ(*BruteForceSingleDepot(10, 4), 3);
  EXPECT_EQ(*BruteForceSingleDepot(11, 4), 4);
  EXPECT_EQ(*BruteForceSingleDepot(5, 4), 2);
  EXPECT_EQ(*BruteForceSingleDepot(20, 4), 7);
}

// Hand-countable: with q = 2 every pair must sum to 3, so at most one vehicle
// carries 1 and the rest carry 2.
TEST(BruteForceSingleDepotTest, CapacityTwoByHand) {
  for (int64_t demand = 1; demand <= 40; ++demand) {
    EXPECT_EQ(*BruteForceSingleDepot(demand, 2), (demand + 1) / 2) << demand;
  }
}

TEST(BruteForceSingleDepotTest, RespectsLimits) {
  EXPECT_TRUE(BruteForceSingleDepot(60, 20).ok());
  EXPECT_EQ(BruteForceSingleDepot(61, 4).status().code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(BruteForceSingleDepot(10, 21).status().code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_TRUE(BruteForceSingleDepot(80, 4, {.max_demand = 80}).ok());
  EXPECT_EQ(BruteForceSingleDepot(-1, 4).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(BruteForceSingleDepot(3, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(BruteForceMultiDepotTest, KnownValues) {
  EXPECT_EQ(*BruteForceMultiDepot(Make(4, {10, 10}, 20)), 6);
  EXPECT_EQ(*BruteForceMultiDepot(Make(4, {5, 5, 5}, 2)), 2);
  EXPECT_EQ(*BruteForceMultiDepot(Make(4, {10, 6, 5}, 15)), 6);
}

TEST(BruteForceMultiDepotTest, DeepModeAgrees) {
  for (int64_t q = 1; q <= 4; ++q) {
    for (int64_t delta = 0; delta <= 14; ++delta) {
      const Instance instance = Make(q, {7, 3, 5}, delta);
      EXPECT_EQ(*BruteForceMultiDepot(instance, {.deep = true}),
                *BruteForceMultiDepot(instance));
    }
  }
}

TEST(BruteForceMultiDepotTest, IndependentOfDepotOrder) {
  for (int64_t delta = 0; delta <= 30; ++delta) {
    const int64_t a = *BruteForceMultiDepot(Make(3, {9, 2, 6}, delta));
    EXPECT_EQ(*BruteForceMultiDepot(Make(3, {2, 6, 9}, delta)), a);
    EXPECT_EQ(*BruteForceMultiDepot(Make(3, {6, 9, 2}, delta)), a);
  }
}

TEST(BruteForceMultiDepotTest, RespectsTupleLimit) {
  const Instance instance = Make(4, {100, 100, 100, 100}, 400);
  EXPECT_EQ(BruteForceMultiDepot(instance).status().code(),
            absl::StatusCode::kResourceExhausted);
  // 11^2 = 121 tuples.
  EXPECT_TRUE(BruteForceMultiDepot(Make(4, {10, 10}, 20), {.max_tuples = 121})
                  .ok());
  EXPECT_FALSE(BruteForceMultiDepot(Make(4, {10, 10}, 20), {.max_tuples = 120})
                   .ok());
  EXPECT_EQ(BruteForceMultiDepot(Make(4, {}, 2)).status().code(),
            absl::StatusCode::kInvalidArgument);
}

}  // namespace
}  // namespace fleetbound
