#ifndef FLEETBOUND_MULTI_DEPOT_H_
#define FLEETBOUND_MULTI_DEPOT_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "fleetbound/instance.h"
#include "fleetbound/vehicle_bounds.h"

namespace fleetbound {

// Tight upper bound on the number of vehicles when the total demand may be
// split across any subset of capacitated depots and each vehicle serves
// exactly one depot. Runs in O(n log n): one sort plus a single scan that
// stops at the pivot depot.
absl::StatusOr<FleetBound> MultiDepotBound(const Instance& instance);

// Case-table row for an instance; depends only on (demand, n, q, c_max).
absl::StatusOr<BoundCase> ClassifyBoundCase(const Instance& instance);

struct DepotAllocation {
  // Quantity delivered to each depot, in the caller's depot order.
  std::vector<int64_t> allocations;
  // MaxVehicles(allocations[i]) for each depot.
  std::vector<int64_t> per_depot_vehicles;

  friend bool operator==(const DepotAllocation&,
                         const DepotAllocation&) = default;
};

// Per-depot quantities attaining MultiDepotBound.
absl::StatusOr<DepotAllocation> MakeMultiDepotWitness(const Instance& instance);

// Sum of MultiDepotBound over independent homogeneous vehicle types, each
// described by its own instance (capacity, accessible depots and demand).
absl::StatusOr<int64_t> HeterogeneousBound(absl::Span<const Instance> subsets);

}  // namespace fleetbound

#endif  // FLEETBOUND_MULTI_DEPOT_H_
