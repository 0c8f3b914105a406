#include "fleetbound/dynamic_program.h"

#include <algorithm>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fleetbound/multi_depot.h"
#include "fleetbound/status_macros.h"

namespace fleetbound {

absl::StatusOr<FleetBound> SolveByDynamicProgramming(
    const Instance& instance, const DpOptions& options) {
  const int64_t n = instance.num_depots();
  if (n == 0) return absl::InvalidArgumentError("instance has no depots");
  const int64_t delta = instance.total_demand();
  if (delta >= options.cell_budget ||
      n > options.cell_budget / (delta + 1)) {
    return absl::ResourceExhaustedError(
        absl::StrCat("dynamic program needs ", n, " x ", delta + 1,
                     " cells, budget is ", options.cell_budget));
  }

  const VehicleCapacity& vehicle = instance.vehicle();
  const auto caps = instance.depot_capacities();
  std::vector<int64_t> vehicles_for(delta + 1);
  for (int64_t x = 0; x <= delta; ++x) vehicles_for[x] = vehicle.MaxVehicles(x);

  // previous[d] = best value using the depots processed so far with budget d.
  std::vector<int64_t> previous(delta + 1);
  std::vector<int64_t> current(delta + 1);
  for (int64_t d = 0; d <= delta; ++d) {
    previous[d] = vehicles_for[std::min(caps[0], d)];
  }
  for (int64_t j = 1; j < n; ++j) {
    for (int64_t d = 0; d <= delta; ++d) {
      const int64_t top = std::min(caps[j], d);
      int64_t best = 0;
      for (int64_t x = 0; x <= top; ++x) {
        best = std::max(best, vehicles_for[x] + previous[d - x]);
      }
      current[d] = best;
    }
    previous.swap(current);
  }

  ASSIGN_OR_RETURN(const BoundCase bound_case, ClassifyBoundCase(instance));
  return FleetBound{.value = previous[delta], .bound_case = bound_case};
}

}  // namespace fleetbound
