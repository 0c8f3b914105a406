#include "fleetbound/brute_force.h"

#include <algorithm>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fleetbound/status_macros.h"
#include "fleetbound/vehicle_bounds.h"

namespace fleetbound {
namespace {

// Extends a non-increasing load sequence whose last load is `last` (0 when
// empty). In a non-increasing sequence the lightest pair is the last two
// loads, so checking each new load against its predecessor covers every
// pair.
void ExtendLoads(int64_t remaining, int64_t last, int64_t count, int64_t q,
                 int64_t& best) {
  if (remaining == 0) {
    best = std::max(best, count);
    return;
  }
  // Even at one unit per vehicle this branch cannot beat the incumbent.
  if (count + remaining <= best) return;
  const int64_t top = std::min(last == 0 ? q : last, remaining);
  for (int64_t load = top; load >= 1; --load) {
    if (last != 0 && last + load < q + 1) break;
    ExtendLoads(remaining - load, load, count + 1, q, best);
  }
}

// Depot-by-depot enumeration of quantity tuples with sum <= budget.
void EnumerateQuantities(const std::vector<int64_t>& bounds,
                         const std::vector<int64_t>& score, size_t depot,
                         int64_t budget, int64_t value, int64_t& best) {
  if (depot == bounds.size()) {
    best = std::max(best, value);
    return;
  }
  const int64_t top = std::min(bounds[depot], budget);
  for (int64_t x = 0; x <= top; ++x) {
    EnumerateQuantities(bounds, score, depot + 1, budget - x,
                        value + score[x], best);
  }
}

}  // namespace

absl::StatusOr<int64_t> BruteForceSingleDepot(
    int64_t total_demand, int64_t q, const SingleDepotSearchLimits& limits) {
  if (q < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("vehicle capacity must be >= 1, got ", q));
  }
  if (total_demand < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("total demand must be >= 0, got ", total_demand));
  }
  if (total_demand > limits.max_demand || q > limits.max_capacity) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "single-depot search refused for demand ", total_demand, ", q ", q,
        " (limits ", limits.max_demand, ", ", limits.max_capacity, ")"));
  }
  int64_t best = -1;
  ExtendLoads(total_demand, 0, 0, q, best);
  if (best < 0) {
    return absl::InternalError(
        absl::StrCat("no feasible load vector for demand ", total_demand));
  }
  return best;
}

absl::StatusOr<int64_t> BruteForceMultiDepot(
    const Instance& instance, const MultiDepotSearchOptions& options) {
  if (instance.num_depots() == 0) {
    return absl::InvalidArgumentError("instance has no depots");
  }
  const int64_t delta = instance.total_demand();
  std::vector<int64_t> bounds;
  int64_t tuples = 1;
  int64_t largest = 0;
  for (const int64_t c : instance.depot_capacities()) {
    const int64_t top = std::min(c, delta);
    bounds.push_back(top);
    largest = std::max(largest, top);
    if (tuples > options.max_tuples / (top + 1)) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "multi-depot enumeration exceeds ", options.max_tuples, " tuples"));
    }
    tuples *= top + 1;
  }

  std::vector<int64_t> score(largest + 1);
  for (int64_t x = 0; x <= largest; ++x) {
    if (options.deep) {
      ASSIGN_OR_RETURN(score[x],
                       BruteForceSingleDepot(x, instance.vehicle_capacity(),
                                             options.single_depot_limits));
    } else {
      score[x] = instance.vehicle().MaxVehicles(x);
    }
  }

  int64_t best = 0;
  EnumerateQuantities(bounds, score, 0, delta, 0, best);
  return best;
}

}  // namespace fleetbound
