#ifndef FLEETBOUND_VEHICLE_BOUNDS_H_
#define FLEETBOUND_VEHICLE_BOUNDS_H_

#include <cstdint>
#include <optional>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"

namespace fleetbound {

// The two integer roundings of (q + 1) / 2 for a vehicle capacity q. The
// rounded-up half is the smallest load the second-lightest vehicle can carry
// in any fleet whose pairwise loads exceed q.
struct HalfCapacity {
  int64_t ceil_q = 1;
  int64_t floor_q = 1;

  friend bool operator==(const HalfCapacity&, const HalfCapacity&) = default;
};

absl::StatusOr<HalfCapacity> ComputeHalfCapacity(int64_t q);

// A validated vehicle capacity together with its half-capacity roundings.
// Member functions are the unchecked fast paths used by the solvers; they
// require non-negative arguments.
class VehicleCapacity {
 public:
  static absl::StatusOr<VehicleCapacity> Create(int64_t q);

  int64_t value() const { return q_; }
  const HalfCapacity& half() const { return half_; }

  // Maximum number of vehicles that can deliver `quantity` units to a single
  // depot when every vehicle carries 1..q units and every pair of vehicles
  // carries more than q units together.
  int64_t MaxVehicles(int64_t quantity) const {
    if (quantity <= q_) return quantity == 0 ? 0 : 1;
    return (quantity - q_ + half_.ceil_q - 1) / half_.ceil_q + 1;
  }

  // Smallest quantity that still needs MaxVehicles(quantity) vehicles.
  int64_t MinimalEquivalentLoad(int64_t quantity) const {
    const int64_t vehicles = MaxVehicles(quantity);
    if (quantity <= q_) return vehicles;
    return (vehicles - 1) * half_.ceil_q + half_.floor_q;
  }

  friend bool operator==(const VehicleCapacity&,
                         const VehicleCapacity&) = default;

 private:
  VehicleCapacity(int64_t q, HalfCapacity half) : q_(q), half_(half) {}

  int64_t q_ = 1;
  HalfCapacity half_;
};

absl::StatusOr<int64_t> MaxVehicles(int64_t quantity, int64_t q);
absl::StatusOr<int64_t> MinimalEquivalentLoad(int64_t quantity, int64_t q);

// Which row of the closed-form case table describes an instance. The value
// never depends on the tag; it is diagnostic only.
enum class BoundCase {
  kTinyDemand,      // total demand <= number of depots
  kPerDepotOne,     // n <= demand < n + q
  kSingleBigDepot,  // n + q <= demand <= largest depot capacity
  kGeneral,         // demand >= max(n + q, largest depot capacity)
};

absl::string_view BoundCaseName(BoundCase bound_case);
std::optional<BoundCase> ParseBoundCase(absl::string_view name);

// Pivot depot of the multi-depot closed form. `ell` is the 1-based position
// in the capacity-descending order and `lambda` the residual demand budget
// that reaches it.
struct PivotTrace {
  int64_t ell = 1;
  int64_t lambda = 1;

  friend bool operator==(const PivotTrace&, const PivotTrace&) = default;
};

struct FleetBound {
  int64_t value = 0;
  BoundCase bound_case = BoundCase::kTinyDemand;
  // Set only for kGeneral results of the closed form.
  std::optional<PivotTrace> pivot;

  friend bool operator==(const FleetBound&, const FleetBound&) = default;
};

// Bound for a single uncapacitated depot receiving `total_demand`. Tagged as
// a one-depot instance whose capacity is unlimited.
absl::StatusOr<FleetBound> SingleDepotBound(int64_t total_demand, int64_t q);

struct SingleDepotWitness {
  std::vector<int64_t> loads;
};

// Refuses witnesses longer than this many vehicles.
inline constexpr int64_t kMaxWitnessVehicles = int64_t{1} << 26;

// Vehicle loads attaining SingleDepotBound: all but the last vehicle carry
// the rounded-up half capacity, the last takes the remainder.
absl::StatusOr<SingleDepotWitness> MakeSingleDepotWitness(int64_t total_demand,
                                                          int64_t q);

}  // namespace fleetbound

#endif  // FLEETBOUND_VEHICLE_BOUNDS_H_
