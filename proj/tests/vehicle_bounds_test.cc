#include "fleetbound/vehicle_bounds.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "absl/status/status.h"
#include "fleetbound/brute_force.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace fleetbound {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

int64_t Vehicles(int64_t quantity, int64_t q) {
  return VehicleCapacity::Create(q)->MaxVehicles(quantity);
}

int64_t Compressed(int64_t quantity, int64_t q) {
  return VehicleCapacity::Create(q)->MinimalEquivalentLoad(quantity);
}

TEST(HalfCapacityTest, RoundsBothWays) {
  EXPECT_EQ(*ComputeHalfCapacity(4), (HalfCapacity{.ceil_q = 3, .floor_q = 2}));
  EXPECT_EQ(*ComputeHalfCapacity(5), (HalfCapacity{.ceil_q = 3, .floor_q = 3}));
  EXPECT_EQ(*ComputeHalfCapacity(1), (HalfCapacity{.ceil_q = 1, .floor_q = 1}));
}

TEST(HalfCapacityTest, RejectsNonPositive) {
  EXPECT_EQ(ComputeHalfCapacity(0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ComputeHalfCapacity(-3).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(HalfCapacityTest, InvariantsHoldUpToInt64Max) {
  for (const int64_t q : {int64_t{1}, int64_t{2}, int64_t{99}, int64_t{100},
                          INT64_MAX - 1, INT64_MAX}) {
    const HalfCapacity half = *ComputeHalfCapacity(q);
    EXPECT_GE(half.ceil_q, half.floor_q);
    EXPECT_GE(half.floor_q, 1);
    // ceil + floor == q + 1, checked without forming q + 1.
    EXPECT_EQ(half.ceil_q - 1, q - half.floor_q) << q;
  }
}

TEST(MaxVehiclesTest, KnownValues) {
  EXPECT_EQ(*MaxVehicles(0, 4), 0);
  EXPECT_EQ(*MaxVehicles(3, 4), 1);
  EXPECT_EQ(*MaxVehicles(4, 4), 1);
  // (3, 2) is feasible for 5 units; (3, 3, 4) for 10; (3, 3, 3, 2) for 11.
  EXPECT_EQ(*MaxVehicles(5, 4), 2);
  EXPECT_EQ(*MaxVehicles(10, 4), 3);
  EXPECT_EQ(*MaxVehicles(11, 4), 4);
  EXPECT_EQ(*MaxVehicles(20, 4), 7);
}

TEST(MaxVehiclesTest, UnitCapacityNeedsOneVehiclePerUnit) {
  for (int64_t quantity = 0; quantity <= 50; ++quantity) {
    EXPECT_EQ(*MaxVehicles(quantity, 1), quantity);
  }
}

TEST(MaxVehiclesTest, RejectsInvalidArguments) {
  EXPECT_EQ(MaxVehicles(-1, 4).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(MaxVehicles(3, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(MaxVehiclesTest, NoOverflowAtTheTopOfTheRange) {
  EXPECT_EQ(*MaxVehicles(INT64_MAX, 1), INT64_MAX);
  EXPECT_EQ(*MaxVehicles(INT64_MAX, INT64_MAX), 1);
  EXPECT_LE(*MaxVehicles(INT64_MAX, INT64_MAX - 1), 2);
  EXPECT_GT(*MaxVehicles(INT64_MAX, 3), 0);
}

TEST(MaxVehiclesTest, MatchesExhaustiveSearch) {
  for (int64_t q = 1; q <= 8; ++q) {
    for (int64_t quantity = 0; quantity <= 30; ++quantity) {
      EXPECT_EQ(Vehicles(quantity, q), *BruteForceSingleDepot(quantity, q))
          << "quantity=" << quantity << " q=" << q;
    }
  }
}

TEST(MinimalEquivalentLoadTest, KnownValues) {
  EXPECT_EQ(*MinimalEquivalentLoad(0, 4), 0);
  EXPECT_EQ(*MinimalEquivalentLoad(3, 4), 1);
  // MaxVehicles(10) = 3, so (3 - 1) * 3 + 2 = 8 and MaxVehicles(8) = 3.
  EXPECT_EQ(*MinimalEquivalentLoad(10, 4), 8);
  EXPECT_EQ(*BruteForceSingleDepot(8, 4), *BruteForceSingleDepot(10, 4));
  EXPECT_EQ(*BruteForceSingleDepot(7, 4), 2);
}

TEST(MinimalEquivalentLoadTest, IsTheSmallestQuantityWithTheSameFleet) {
  for (int64_t q = 1; q <= 12; ++q) {
    for (int64_t quantity = 0; quantity <= 200; ++quantity) {
      const int64_t compressed = Compressed(quantity, q);
      ASSERT_EQ(Vehicles(compressed, q), Vehicles(quantity, q));
      if (compressed > 0) {
        ASSERT_LT(Vehicles(compressed - 1, q), Vehicles(quantity, q))
            << "quantity=" << quantity << " q=" << q;
      }
    }
  }
}

// Properties of the single-depot closed form over a moderate grid; the
// acceptance suite runs the full-size grids.
TEST(VehicleBoundPropertiesTest, StepsByAtMostOneAndNeverExceedsQuantity) {
  for (int64_t q = 1; q <= 40; ++q) {
    for (int64_t a = 0; a <= 2000; ++a) {
      const int64_t step = Vehicles(a + 1, q) - Vehicles(a, q);
      ASSERT_GE(step, 0);
      ASSERT_LE(step, 1);
      ASSERT_LE(Vehicles(a, q), a);
    }
  }
}

TEST(VehicleBoundPropertiesTest, CompressionIsBelowAndPreservesFleet) {
  for (int64_t q = 1; q <= 40; ++q) {
    for (int64_t a = 0; a <= 2000; ++a) {
      const int64_t compressed = Compressed(a, q);
      ASSERT_LE(compressed, a);
      ASSERT_EQ(Vehicles(compressed, q), Vehicles(a, q));
      if (a > q) ASSERT_GT(compressed, q);
    }
  }
}

TEST(VehicleBoundPropertiesTest, SplittingCostsAtMostOneExtraVehicle) {
  for (int64_t q = 1; q <= 10; ++q) {
    const int64_t floor_q = ComputeHalfCapacity(q)->floor_q;
    for (int64_t b = 1; b <= 150; ++b) {
      for (int64_t a = 0; a <= b; ++a) {
        const int64_t split = Vehicles(a, q) + Vehicles(b - a, q);
        ASSERT_LE(split, 1 + Vehicles(b - 1, q));
        if (q < a && a < b - q) {
          ASSERT_LE(split, 1 + Vehicles(b - floor_q, q));
        }
      }
    }
  }
}

TEST(SingleDepotBoundTest, ValuesAndCases) {
  EXPECT_EQ(*SingleDepotBound(4, 4),
            (FleetBound{.value = 1, .bound_case = BoundCase::kPerDepotOne}));
  EXPECT_EQ(*SingleDepotBound(20, 4),
            (FleetBound{.value = 7, .bound_case = BoundCase::kSingleBigDepot}));
  EXPECT_EQ(SingleDepotBound(5, 4)->value, 2);
  EXPECT_EQ(*SingleDepotBound(0, 4),
            (FleetBound{.value = 0, .bound_case = BoundCase::kTinyDemand}));
  EXPECT_EQ(*SingleDepotBound(1, 4),
            (FleetBound{.value = 1, .bound_case = BoundCase::kTinyDemand}));
  EXPECT_FALSE(SingleDepotBound(20, 4)->pivot.has_value());
  EXPECT_EQ(*BruteForceSingleDepot(20, 4), 7);
}

TEST(SingleDepotWitnessTest, KnownWitnesses) {
  EXPECT_THAT(MakeSingleDepotWitness(10, 4)->loads, ElementsAre(3, 3, 4));
  EXPECT_THAT(MakeSingleDepotWitness(7, 4)->loads, ElementsAre(3, 4));
  EXPECT_THAT(MakeSingleDepotWitness(0, 4)->loads, IsEmpty());
  EXPECT_THAT(MakeSingleDepotWitness(3, 4)->loads, ElementsAre(3));
  EXPECT_THAT(MakeSingleDepotWitness(11, 4)->loads, ElementsAre(3, 3, 3, 2));
}

TEST(SingleDepotWitnessTest, SatisfiesEveryConstraintAndAttainsTheBound) {
  for (int64_t q = 1; q <= 25; ++q) {
    for (int64_t demand = 0; demand <= 300; ++demand) {
      const auto witness = MakeSingleDepotWitness(demand, q);
      ASSERT_TRUE(witness.ok());
      const auto& loads = witness->loads;
      ASSERT_EQ(static_cast<int64_t>(loads.size()), Vehicles(demand, q));
      ASSERT_EQ(std::accumulate(loads.begin(), loads.end(), int64_t{0}),
                demand);
      for (const int64_t load : loads) {
        ASSERT_GE(load, 1);
        ASSERT_LE(load, q);
      }
      if (loads.size() >= 2) {
        // The lightest pair decides every pairwise constraint.
        std::vector<int64_t> sorted = loads;
        std::sort(sorted.begin(), sorted.end());
        ASSERT_GE(sorted[0] + sorted[1], q + 1)
            << "demand=" << demand << " q=" << q;
      }
    }
  }
}

TEST(SingleDepotWitnessTest, RefusesHugeWitnesses) {
  EXPECT_EQ(MakeSingleDepotWitness(int64_t{1} << 40, 1).status().code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(MakeSingleDepotWitness(-1, 4).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(BoundCaseTest, NamesRoundTrip) {
  for (const BoundCase c :
       {BoundCase::kTinyDemand, BoundCase::kPerDepotOne,
        BoundCase::kSingleBigDepot, BoundCase::kGeneral}) {
    EXPECT_EQ(ParseBoundCase(BoundCaseName(c)), c);
  }
  EXPECT_EQ(BoundCaseName(BoundCase::kGeneral), "General");
  EXPECT_FALSE(ParseBoundCase("general").has_value());
}

}  // namespace
}  // namespace fleetbound
