#ifndef FLEETBOUND_BRUTE_FORCE_H_
#define FLEETBOUND_BRUTE_FORCE_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "fleetbound/instance.h"

namespace fleetbound {

struct SingleDepotSearchLimits {
  int64_t max_demand = 60;
  int64_t max_capacity = 20;
};

// Exhaustive search for the largest number of vehicles whose loads are in
// 1..q, sum to `total_demand`, and pairwise sum to at least q + 1. Loads are
// enumerated as non-increasing sequences, so only consecutive pairs need
// checking. Shares no code with the closed form.
absl::StatusOr<int64_t> BruteForceSingleDepot(
    int64_t total_demand, int64_t q, const SingleDepotSearchLimits& limits = {});

struct MultiDepotSearchOptions {
  // Refuse when prod_i (min(c_i, demand) + 1) exceeds this.
  int64_t max_tuples = 10'000'000;
  // Score each depot quantity with BruteForceSingleDepot instead of the
  // closed form. Only for tiny instances.
  bool deep = false;
  SingleDepotSearchLimits single_depot_limits;
};

// Maximum of sum_i MaxVehicles(x_i) over every (x_1..x_n) with
// 0 <= x_i <= c_i and sum x_i <= total demand, by full enumeration.
absl::StatusOr<int64_t> BruteForceMultiDepot(
    const Instance& instance, const MultiDepotSearchOptions& options = {});

}  // namespace fleetbound

#endif  // FLEETBOUND_BRUTE_FORCE_H_
