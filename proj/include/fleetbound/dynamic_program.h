#ifndef FLEETBOUND_DYNAMIC_PROGRAM_H_
#define FLEETBOUND_DYNAMIC_PROGRAM_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "fleetbound/instance.h"
#include "fleetbound/vehicle_bounds.h"

namespace fleetbound {

struct DpOptions {
  // Upper limit on depots * (demand + 1) table cells.
  int64_t cell_budget = 100'000'000;
};

// Evaluates the depot-by-depot recursion
//   V_1(d) = MaxVehicles(min(c_1, d))
//   V_j(d) = max_{0 <= x <= min(c_j, d)} MaxVehicles(x) + V_{j-1}(d - x)
// bottom-up, keeping two rows. Depots are taken in caller order. Intended as
// a mid-scale cross-check of MultiDepotBound; the result carries no pivot.
absl::StatusOr<FleetBound> SolveByDynamicProgramming(
    const Instance& instance, const DpOptions& options = {});

}  // namespace fleetbound

#endif  // FLEETBOUND_DYNAMIC_PROGRAM_H_
