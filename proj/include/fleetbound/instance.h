#ifndef FLEETBOUND_INSTANCE_H_
#define FLEETBOUND_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "fleetbound/vehicle_bounds.h"

namespace fleetbound {

// A validated fleet-bound instance: homogeneous vehicle capacity, depot
// capacities in caller order, and the total demand (optionally broken down
// per demand point). Immutable after construction.
class Instance {
 public:
  // Either `demands` or `total_demand` must be given; when both are, they
  // must agree. Depot capacities must be >= 1 but the list may be empty
  // (multi-depot operations reject that case themselves).
  static absl::StatusOr<Instance> Create(
      int64_t vehicle_capacity, std::vector<int64_t> depot_capacities,
      std::optional<std::vector<int64_t>> demands,
      std::optional<int64_t> total_demand);

  static absl::StatusOr<Instance> WithTotalDemand(
      int64_t vehicle_capacity, std::vector<int64_t> depot_capacities,
      int64_t total_demand) {
    return Create(vehicle_capacity, std::move(depot_capacities), std::nullopt,
                  total_demand);
  }

  static absl::StatusOr<Instance> WithDemands(
      int64_t vehicle_capacity, std::vector<int64_t> depot_capacities,
      std::vector<int64_t> demands) {
    return Create(vehicle_capacity, std::move(depot_capacities),
                  std::move(demands), std::nullopt);
  }

  const VehicleCapacity& vehicle() const { return vehicle_; }
  int64_t vehicle_capacity() const { return vehicle_.value(); }
  absl::Span<const int64_t> depot_capacities() const {
    return depot_capacities_;
  }
  int64_t num_depots() const {
    return static_cast<int64_t>(depot_capacities_.size());
  }
  const std::optional<std::vector<int64_t>>& demands() const {
    return demands_;
  }
  int64_t total_demand() const { return total_demand_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance(VehicleCapacity vehicle, std::vector<int64_t> depot_capacities,
           std::optional<std::vector<int64_t>> demands, int64_t total_demand)
      : vehicle_(vehicle),
        depot_capacities_(std::move(depot_capacities)),
        demands_(std::move(demands)),
        total_demand_(total_demand) {}

  VehicleCapacity vehicle_;
  std::vector<int64_t> depot_capacities_;
  std::optional<std::vector<int64_t>> demands_;
  int64_t total_demand_ = 0;
};

}  // namespace fleetbound

#endif  // FLEETBOUND_INSTANCE_H_
