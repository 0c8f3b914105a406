#include "fleetbound/multi_depot.h"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fleetbound/checked_math.h"
#include "fleetbound/status_macros.h"

namespace fleetbound {
namespace {

absl::Status CheckHasDepots(const Instance& instance) {
  if (instance.num_depots() == 0) {
    return absl::InvalidArgumentError("instance has no depots");
  }
  return absl::OkStatus();
}

struct PivotScan {
  int64_t value = 0;
  PivotTrace pivot;
};

// Closed form for demand > n over capacities sorted in non-increasing order.
// Every depot keeps at least one unit; the remaining budget
// lambda = demand - n + 1 is handed to the largest depots, each compressed
// to the smallest quantity that needs the same number of vehicles, until the
// next depot would leave the budget below one unit.
absl::StatusOr<PivotScan> ScanSortedCapacities(
    absl::Span<const int64_t> sorted, const VehicleCapacity& vehicle,
    int64_t delta) {
  const int64_t n = static_cast<int64_t>(sorted.size());
  int64_t lambda = delta - n + 1;
  int64_t saturated_extra = 0;
  int64_t ell = 1;
  for (; ell < n; ++ell) {
    const int64_t capacity = sorted[ell - 1];
    const int64_t next =
        lambda - (vehicle.MinimalEquivalentLoad(capacity) - 1);
    if (next < 1) break;
    ASSIGN_OR_RETURN(saturated_extra,
                     CheckedAdd(saturated_extra,
                                vehicle.MaxVehicles(capacity) - 1,
                                "saturated depot vehicles"));
    lambda = next;
  }
  const int64_t pivot_vehicles =
      vehicle.MaxVehicles(std::min(lambda, sorted[ell - 1]));
  ASSIGN_OR_RETURN(int64_t value,
                   CheckedAdd(n - 1, pivot_vehicles, "fleet bound"));
  ASSIGN_OR_RETURN(value, CheckedAdd(value, saturated_extra, "fleet bound"));
  return PivotScan{.value = value,
                   .pivot = PivotTrace{.ell = ell, .lambda = lambda}};
}

BoundCase Classify(int64_t delta, int64_t n, int64_t q, int64_t max_capacity) {
  if (delta <= n) return BoundCase::kTinyDemand;
  if (delta - n < q) return BoundCase::kPerDepotOne;
  if (delta <= max_capacity) return BoundCase::kSingleBigDepot;
  return BoundCase::kGeneral;
}

// Depot indices ordered by capacity, largest first; ties keep input order.
std::vector<size_t> DescendingOrder(absl::Span<const int64_t> capacities) {
  std::vector<size_t> order(capacities.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return capacities[a] > capacities[b];
  });
  return order;
}

}  // namespace

absl::StatusOr<BoundCase> ClassifyBoundCase(const Instance& instance) {
  RETURN_IF_ERROR(CheckHasDepots(instance));
  const auto caps = instance.depot_capacities();
  return Classify(instance.total_demand(), instance.num_depots(),
                  instance.vehicle_capacity(),
                  *std::max_element(caps.begin(), caps.end()));
}

absl::StatusOr<FleetBound> MultiDepotBound(const Instance& instance) {
  RETURN_IF_ERROR(CheckHasDepots(instance));
  const int64_t n = instance.num_depots();
  const int64_t delta = instance.total_demand();
  if (delta <= n) {
    return FleetBound{.value = delta, .bound_case = BoundCase::kTinyDemand};
  }

  std::vector<int64_t> sorted(instance.depot_capacities().begin(),
                              instance.depot_capacities().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  ASSIGN_OR_RETURN(const PivotScan scan,
                   ScanSortedCapacities(sorted, instance.vehicle(), delta));

  FleetBound bound{.value = scan.value,
                   .bound_case = Classify(delta, n,
                                          instance.vehicle_capacity(),
                                          sorted.front())};
  if (bound.bound_case == BoundCase::kGeneral) bound.pivot = scan.pivot;
  return bound;
}

absl::StatusOr<DepotAllocation> MakeMultiDepotWitness(
    const Instance& instance) {
  RETURN_IF_ERROR(CheckHasDepots(instance));
  const auto caps = instance.depot_capacities();
  const VehicleCapacity& vehicle = instance.vehicle();
  const int64_t n = instance.num_depots();
  const int64_t delta = instance.total_demand();
  const std::vector<size_t> order = DescendingOrder(caps);

  // Quantities in sorted position.
  std::vector<int64_t> sorted_alloc(n, 0);
  if (delta <= n) {
    std::fill_n(sorted_alloc.begin(), delta, 1);
  } else {
    std::vector<int64_t> sorted(n);
    for (int64_t i = 0; i < n; ++i) sorted[i] = caps[order[i]];
    ASSIGN_OR_RETURN(const PivotScan scan,
                     ScanSortedCapacities(sorted, vehicle, delta));
    const int64_t ell = scan.pivot.ell;
    for (int64_t i = 0; i < n; ++i) {
      if (i + 1 < ell) {
        sorted_alloc[i] = vehicle.MinimalEquivalentLoad(sorted[i]);
      } else if (i + 1 == ell) {
        sorted_alloc[i] = vehicle.MinimalEquivalentLoad(
            std::min(scan.pivot.lambda, sorted[i]));
      } else {
        sorted_alloc[i] = 1;
      }
    }
  }

  DepotAllocation witness;
  witness.allocations.assign(n, 0);
  witness.per_depot_vehicles.assign(n, 0);
  for (int64_t i = 0; i < n; ++i) {
    witness.allocations[order[i]] = sorted_alloc[i];
    witness.per_depot_vehicles[order[i]] =
        vehicle.MaxVehicles(sorted_alloc[i]);
  }
  return witness;
}

absl::StatusOr<int64_t> HeterogeneousBound(
    absl::Span<const Instance> subsets) {
  int64_t total = 0;
  for (size_t i = 0; i < subsets.size(); ++i) {
    auto bound = MultiDepotBound(subsets[i]);
    if (!bound.ok()) {
      return absl::Status(bound.status().code(),
                          absl::StrCat("vehicle type #", i, ": ",
                                       bound.status().message()));
    }
    ASSIGN_OR_RETURN(total,
                     CheckedAdd(total, bound->value, "heterogeneous bound"));
  }
  return total;
}

}  // namespace fleetbound
