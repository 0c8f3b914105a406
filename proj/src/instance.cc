#include "fleetbound/instance.h"

#include <cstddef>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fleetbound/checked_math.h"
#include "fleetbound/status_macros.h"

namespace fleetbound {

absl::StatusOr<Instance> Instance::Create(
    int64_t vehicle_capacity, std::vector<int64_t> depot_capacities,
    std::optional<std::vector<int64_t>> demands,
    std::optional<int64_t> total_demand) {
  ASSIGN_OR_RETURN(VehicleCapacity vehicle,
                   VehicleCapacity::Create(vehicle_capacity));
  for (size_t i = 0; i < depot_capacities.size(); ++i) {
    if (depot_capacities[i] < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("depot capacity #", i, " must be >= 1, got ",
                       depot_capacities[i]));
    }
  }
  if (!demands.has_value() && !total_demand.has_value()) {
    return absl::InvalidArgumentError(
        "either demands or total demand must be given");
  }
  int64_t delta = 0;
  if (demands.has_value()) {
    for (size_t i = 0; i < demands->size(); ++i) {
      const int64_t d = (*demands)[i];
      if (d < 0) {
        return absl::InvalidArgumentError(
            absl::StrCat("demand #", i, " must be >= 0, got ", d));
      }
      ASSIGN_OR_RETURN(delta, CheckedAdd(delta, d, "sum of demands"));
    }
    if (total_demand.has_value() && *total_demand != delta) {
      return absl::InvalidArgumentError(
          absl::StrCat("total demand ", *total_demand,
                       " does not match the sum of demands ", delta));
    }
  } else {
    delta = *total_demand;
    if (delta < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("total demand must be >= 0, got ", delta));
    }
  }
  return Instance(vehicle, std::move(depot_capacities), std::move(demands),
                  delta);
}

}  // namespace fleetbound
