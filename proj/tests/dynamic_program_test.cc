#include "fleetbound/dynamic_program.h"

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "fleetbound/brute_force.h"
#include "fleetbound/multi_depot.h"
#include "fleetbound/random.h"
#include "gtest/gtest.h"

namespace fleetbound {
namespace {

Instance Make(int64_t q, std::vector<int64_t> capacities, int64_t delta) {
  return *Instance::WithTotalDemand(q, std::move(capacities), delta);
}

TEST(DynamicProgramTest, KnownValues) {
  EXPECT_EQ(SolveByDynamicProgramming(Make(4, {10, 10}, 20))->value, 6);
  EXPECT_EQ(SolveByDynamicProgramming(Make(4, {5}, 3))->value, 1);
  EXPECT_EQ(SolveByDynamicProgramming(Make(4, {10, 6, 5}, 15))->value, 6);
  EXPECT_EQ(SolveByDynamicProgramming(Make(4, {30, 7, 7}, 12))->value, 5);
}

TEST(DynamicProgramTest, CarriesCaseButNoPivot) {
  const FleetBound bound = *SolveByDynamicProgramming(Make(4, {10, 6, 5}, 15));
  EXPECT_EQ(bound.bound_case, BoundCase::kGeneral);
  EXPECT_FALSE(bound.pivot.has_value());
}

TEST(DynamicProgramTest, EnforcesCellBudget) {
  const Instance instance = Make(4, {10, 10, 10}, 99);
  EXPECT_TRUE(SolveByDynamicProgramming(instance, {.cell_budget = 300}).ok());
  EXPECT_EQ(SolveByDynamicProgramming(instance, {.cell_budget = 299})
                .status()
                .code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(SolveByDynamicProgramming(Make(4, {1}, INT64_MAX)).status().code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(DynamicProgramTest, RejectsEmptyDepotList) {
  EXPECT_EQ(SolveByDynamicProgramming(Make(4, {}, 3)).status().code(),
            absl::StatusCode::kInvalidArgument);
}

// Mid-scale instances: too large for enumeration, fine for the recursion.
TEST(DynamicProgramTest, AgreesWithClosedFormOnRandomMidScaleInstances) {
  Lcg64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int64_t q = rng.Uniform(1, 30);
    std::vector<int64_t> caps(rng.Uniform(1, 12));
    for (int64_t& c : caps) c = rng.Uniform(1, 150);
    const Instance instance = Make(q, caps, rng.Uniform(0, 600));
    ASSERT_EQ(SolveByDynamicProgramming(instance)->value,
              MultiDepotBound(instance)->value)
        << "trial " << trial;
  }
}

TEST(DynamicProgramTest, AgreesWithEnumeration) {
  Lcg64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int64_t q = rng.Uniform(1, 7);
    std::vector<int64_t> caps(rng.Uniform(1, 4));
    for (int64_t& c : caps) c = rng.Uniform(1, 15);
    const Instance instance = Make(q, caps, rng.Uniform(0, 40));
    ASSERT_EQ(SolveByDynamicProgramming(instance)->value,
              *BruteForceMultiDepot(instance));
  }
}

}  // namespace
}  // namespace fleetbound
