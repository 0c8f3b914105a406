#include "fleetbound/vehicle_bounds.h"

#include <array>
#include <optional>
#include "absl/strings/string_view.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fleetbound/status_macros.h"

namespace fleetbound {

absl::StatusOr<HalfCapacity> ComputeHalfCapacity(int64_t q) {
  if (q < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("vehicle capacity must be >= 1, got ", q));
  }
  // (q + 1) / 2 rounded both ways, without forming q + 1.
  return HalfCapacity{.ceil_q = q / 2 + 1, .floor_q = q - q / 2};
}

absl::StatusOr<VehicleCapacity> VehicleCapacity::Create(int64_t q) {
  ASSIGN_OR_RETURN(HalfCapacity half, ComputeHalfCapacity(q));
  return VehicleCapacity(q, half);
}

absl::StatusOr<int64_t> MaxVehicles(int64_t quantity, int64_t q) {
  ASSIGN_OR_RETURN(VehicleCapacity vehicle, VehicleCapacity::Create(q));
  if (quantity < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("quantity must be >= 0, got ", quantity));
  }
  return vehicle.MaxVehicles(quantity);
}

absl::StatusOr<int64_t> MinimalEquivalentLoad(int64_t quantity, int64_t q) {
  ASSIGN_OR_RETURN(VehicleCapacity vehicle, VehicleCapacity::Create(q));
  if (quantity < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("quantity must be >= 0, got ", quantity));
  }
  return vehicle.MinimalEquivalentLoad(quantity);
}

namespace {

constexpr std::array<std::pair<BoundCase, absl::string_view>, 4> kCaseNames = {{
    {BoundCase::kTinyDemand, "TinyDemand"},
    {BoundCase::kPerDepotOne, "PerDepotOne"},
    {BoundCase::kSingleBigDepot, "SingleBigDepot"},
    {BoundCase::kGeneral, "General"},
}};

}  // namespace

absl::string_view BoundCaseName(BoundCase bound_case) {
  for (const auto& [value, name] : kCaseNames) {
    if (value == bound_case) return name;
  }
  return "Unknown";
}

std::optional<BoundCase> ParseBoundCase(absl::string_view name) {
  for (const auto& [value, case_name] : kCaseNames) {
    if (case_name == name) return value;
  }
  return std::nullopt;
}

absl::StatusOr<FleetBound> SingleDepotBound(int64_t total_demand, int64_t q) {
  ASSIGN_OR_RETURN(const int64_t value, MaxVehicles(total_demand, q));
  FleetBound bound{.value = value};
  if (total_demand <= 1) {
    bound.bound_case = BoundCase::kTinyDemand;
  } else if (total_demand <= q) {
    bound.bound_case = BoundCase::kPerDepotOne;
  } else {
    bound.bound_case = BoundCase::kSingleBigDepot;
  }
  return bound;
}

absl::StatusOr<SingleDepotWitness> MakeSingleDepotWitness(int64_t total_demand,
                                                          int64_t q) {
  ASSIGN_OR_RETURN(VehicleCapacity vehicle, VehicleCapacity::Create(q));
  if (total_demand < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("total demand must be >= 0, got ", total_demand));
  }
  SingleDepotWitness witness;
  if (total_demand == 0) return witness;
  if (total_demand <= q) {
    witness.loads.push_back(total_demand);
    return witness;
  }
  const int64_t vehicles = vehicle.MaxVehicles(total_demand);
  if (vehicles > kMaxWitnessVehicles) {
    return absl::ResourceExhaustedError(
        absl::StrCat("witness would list ", vehicles, " vehicles (limit ",
                     kMaxWitnessVehicles, ")"));
  }
  const int64_t half = vehicle.half().ceil_q;
  witness.loads.assign(vehicles - 1, half);
  witness.loads.push_back(total_demand - half * (vehicles - 1));
  return witness;
}

}  // namespace fleetbound
