#ifndef FLEETBOUND_TRIVIAL_BOUNDS_H_
#define FLEETBOUND_TRIVIAL_BOUNDS_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "fleetbound/instance.h"

namespace fleetbound {

// The proposed bound next to the classical single-depot fleet bounds.
struct BoundComparison {
  int64_t proposed = 0;
  // Sum over demand points of ceil(d_i / q); only when demands are known.
  std::optional<int64_t> per_point_ceiling;
  int64_t labbe = 0;     // ceil(2 * demand / q)
  int64_t archetti = 0;  // 2 * ceil(demand / q)

  friend bool operator==(const BoundComparison&,
                         const BoundComparison&) = default;
};

absl::StatusOr<BoundComparison> CompareWithTrivialBounds(
    const Instance& instance);

}  // namespace fleetbound

#endif  // FLEETBOUND_TRIVIAL_BOUNDS_H_
