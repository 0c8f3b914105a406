#include "fleetbound/trivial_bounds.h"

#include "absl/status/status.h"
#include "fleetbound/checked_math.h"
#include "fleetbound/multi_depot.h"
#include "fleetbound/status_macros.h"

namespace fleetbound {

absl::StatusOr<BoundComparison> CompareWithTrivialBounds(
    const Instance& instance) {
  const int64_t q = instance.vehicle_capacity();
  const int64_t delta = instance.total_demand();
  BoundComparison comparison;
  ASSIGN_OR_RETURN(const FleetBound proposed, MultiDepotBound(instance));
  comparison.proposed = proposed.value;

  // ceil(2 * delta / q) = 2 * (delta / q) + ceil(2 * r / q) with
  // r = delta % q; the second term is 0, 1 or 2.
  const int64_t r = delta % q;
  const int64_t remainder_term = r == 0 ? 0 : (r <= q - r ? 1 : 2);
  ASSIGN_OR_RETURN(const int64_t twice_floor,
                   CheckedMul(2, delta / q, "ceil(2 * demand / q)"));
  ASSIGN_OR_RETURN(comparison.labbe,
                   CheckedAdd(twice_floor, remainder_term,
                              "ceil(2 * demand / q)"));
  ASSIGN_OR_RETURN(comparison.archetti,
                   CheckedMul(2, CeilDiv(delta, q), "2 * ceil(demand / q)"));

  if (instance.demands().has_value()) {
    int64_t per_point = 0;
    for (const int64_t d : *instance.demands()) {
      ASSIGN_OR_RETURN(per_point, CheckedAdd(per_point, CeilDiv(d, q),
                                             "sum of ceil(d_i / q)"));
    }
    comparison.per_point_ceiling = per_point;
  }
  return comparison;
}

}  // namespace fleetbound
