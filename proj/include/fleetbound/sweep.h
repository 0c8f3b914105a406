#ifndef FLEETBOUND_SWEEP_H_
#define FLEETBOUND_SWEEP_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "fleetbound/brute_force.h"
#include "fleetbound/dynamic_program.h"
#include "fleetbound/instance.h"
#include "json.hpp"

namespace fleetbound {

// Inclusive integer interval; empty when lo > hi.
struct IntRange {
  int64_t lo = 0;
  int64_t hi = 0;

  bool empty() const { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct Exhaustive {
  friend bool operator==(const Exhaustive&, const Exhaustive&) = default;
};

struct RandomSample {
  int64_t count = 0;
  uint64_t seed = 0;
  friend bool operator==(const RandomSample&, const RandomSample&) = default;
};

struct GridSpec {
  IntRange q{1, 4};
  IntRange n{1, 2};
  IntRange c{1, 8};
  IntRange delta{0, 16};
  std::variant<Exhaustive, RandomSample> mode = Exhaustive{};

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

absl::Status ValidateGridSpec(const GridSpec& spec);

// Instances described by `spec`, in a fixed order. Exhaustive mode walks q,
// then n, then non-increasing capacity tuples (lexicographic), then demand.
// Sampling mode draws q, n, each capacity, then demand from Lcg64(seed), so
// capacities come in arbitrary order.
absl::StatusOr<std::vector<Instance>> EnumerateInstances(const GridSpec& spec);

struct Mismatch {
  int64_t index = 0;  // position in EnumerateInstances order
  Instance instance;
  int64_t closed_form = 0;
  int64_t dynamic_program = 0;
  int64_t brute_force = 0;
  // Single-depot closed form and search, for one-depot instances inside the
  // search limits.
  std::optional<int64_t> single_depot_closed_form;
  std::optional<int64_t> single_depot_brute_force;
};

struct SweepReport {
  GridSpec spec;
  int64_t instances_checked = 0;
  int64_t single_depot_checks = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_ms = 0;
};

struct SweepOptions {
  int workers = 1;
  DpOptions dp;
  MultiDepotSearchOptions brute_force;
  // Replaces MultiDepotBound as the closed-form side. Test hook for the
  // negative path; leave empty in production.
  std::function<absl::StatusOr<int64_t>(const Instance&)> closed_form_override;
};

// Checks closed form = dynamic program = brute force on every instance of
// the grid (and the single-depot closed form against its own search for
// one-depot instances). Fails up front when the grid is invalid or would
// exceed the oracle limits; disagreements are report content.
absl::StatusOr<SweepReport> Sweep(const GridSpec& spec,
                                  const SweepOptions& options = {});

nlohmann::ordered_json GridSpecToJson(const GridSpec& spec);
nlohmann::ordered_json SweepReportToJson(const SweepReport& report);

}  // namespace fleetbound

#endif  // FLEETBOUND_SWEEP_H_
