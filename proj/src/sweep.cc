#include "fleetbound/sweep.h"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fleetbound/multi_depot.h"
#include "fleetbound/random.h"
#include "fleetbound/status_macros.h"
#include "fleetbound/vehicle_bounds.h"

namespace fleetbound {
namespace {

absl::Status CheckLowerBound(const IntRange& range, int64_t minimum,
                             absl::string_view what) {
  if (!range.empty() && range.lo < minimum) {
    return absl::InvalidArgumentError(absl::StrCat(
        what, " range must start at >= ", minimum, ", got ", range.lo));
  }
  return absl::OkStatus();
}

bool GridIsEmpty(const GridSpec& spec) {
  if (spec.q.empty() || spec.n.empty() || spec.c.empty() ||
      spec.delta.empty()) {
    return true;
  }
  if (const auto* sample = std::get_if<RandomSample>(&spec.mode)) {
    return sample->count == 0;
  }
  return false;
}

// Refuses grids whose largest instance is beyond the oracles' limits.
absl::Status CheckOracleLimits(const GridSpec& spec,
                               const SweepOptions& options) {
  if (GridIsEmpty(spec)) return absl::OkStatus();
  const int64_t per_depot = std::min(spec.c.hi, spec.delta.hi) + 1;
  int64_t tuples = 1;
  for (int64_t i = 0; i < spec.n.hi; ++i) {
    if (tuples > options.brute_force.max_tuples / per_depot) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "grid needs up to ", per_depot, "^", spec.n.hi,
          " brute-force tuples per instance, limit is ",
          options.brute_force.max_tuples));
    }
    tuples *= per_depot;
  }
  if (spec.delta.hi >= options.dp.cell_budget ||
      spec.n.hi > options.dp.cell_budget / (spec.delta.hi + 1)) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "grid needs up to ", spec.n.hi, " x ", spec.delta.hi + 1,
        " dynamic-program cells, budget is ", options.dp.cell_budget));
  }
  return absl::OkStatus();
}

void AppendCapacityTuples(const GridSpec& spec, int64_t q, int64_t n,
                          std::vector<int64_t>& prefix,
                          std::vector<Instance>& out) {
  if (static_cast<int64_t>(prefix.size()) == n) {
    for (int64_t delta = spec.delta.lo; delta <= spec.delta.hi; ++delta) {
      out.push_back(*Instance::WithTotalDemand(q, prefix, delta));
    }
    return;
  }
  const int64_t top = prefix.empty() ? spec.c.hi : prefix.back();
  for (int64_t c = spec.c.lo; c <= top; ++c) {
    prefix.push_back(c);
    AppendCapacityTuples(spec, q, n, prefix, out);
    prefix.pop_back();
  }
}

absl::StatusOr<std::optional<Mismatch>> CheckInstance(
    int64_t index, const Instance& instance, const SweepOptions& options) {
  Mismatch record{.index = index, .instance = instance};
  if (options.closed_form_override) {
    ASSIGN_OR_RETURN(record.closed_form,
                     options.closed_form_override(instance));
  } else {
    ASSIGN_OR_RETURN(const FleetBound bound, MultiDepotBound(instance));
    record.closed_form = bound.value;
  }
  ASSIGN_OR_RETURN(const FleetBound dp,
                   SolveByDynamicProgramming(instance, options.dp));
  record.dynamic_program = dp.value;
  ASSIGN_OR_RETURN(record.brute_force,
                   BruteForceMultiDepot(instance, options.brute_force));
  bool agree = record.closed_form == record.dynamic_program &&
               record.dynamic_program == record.brute_force;

  const SingleDepotSearchLimits& limits =
      options.brute_force.single_depot_limits;
  if (instance.num_depots() == 1 &&
      instance.total_demand() <= limits.max_demand &&
      instance.vehicle_capacity() <= limits.max_capacity) {
    record.single_depot_closed_form =
        instance.vehicle().MaxVehicles(instance.total_demand());
    ASSIGN_OR_RETURN(record.single_depot_brute_force,
                     BruteForceSingleDepot(instance.total_demand(),
                                           instance.vehicle_capacity(),
                                           limits));
    agree = agree && record.single_depot_closed_form ==
                         record.single_depot_brute_force;
  }
  if (agree) return std::optional<Mismatch>();
  return std::optional<Mismatch>(std::move(record));
}

struct InstanceOutcome {
  absl::Status status;
  std::optional<Mismatch> mismatch;
  bool single_depot_checked = false;
};

bool SingleDepotChecked(const Instance& instance,
                        const SingleDepotSearchLimits& limits) {
  return instance.num_depots() == 1 &&
         instance.total_demand() <= limits.max_demand &&
         instance.vehicle_capacity() <= limits.max_capacity;
}

nlohmann::ordered_json RangeToJson(const IntRange& range) {
  return nlohmann::ordered_json::array({range.lo, range.hi});
}

}  // namespace

absl::Status ValidateGridSpec(const GridSpec& spec) {
  RETURN_IF_ERROR(CheckLowerBound(spec.q, 1, "q"));
  RETURN_IF_ERROR(CheckLowerBound(spec.n, 1, "n"));
  RETURN_IF_ERROR(CheckLowerBound(spec.c, 1, "c"));
  RETURN_IF_ERROR(CheckLowerBound(spec.delta, 0, "delta"));
  if (const auto* sample = std::get_if<RandomSample>(&spec.mode)) {
    if (sample->count < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample count must be >= 0, got ", sample->count));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Instance>> EnumerateInstances(
    const GridSpec& spec) {
  RETURN_IF_ERROR(ValidateGridSpec(spec));
  std::vector<Instance> instances;
  if (GridIsEmpty(spec)) return instances;

  if (const auto* sample = std::get_if<RandomSample>(&spec.mode)) {
    Lcg64 rng(sample->seed);
    instances.reserve(sample->count);
    for (int64_t i = 0; i < sample->count; ++i) {
      const int64_t q = rng.Uniform(spec.q.lo, spec.q.hi);
      const int64_t n = rng.Uniform(spec.n.lo, spec.n.hi);
      std::vector<int64_t> capacities(n);
      for (int64_t& c : capacities) c = rng.Uniform(spec.c.lo, spec.c.hi);
      const int64_t delta = rng.Uniform(spec.delta.lo, spec.delta.hi);
      ASSIGN_OR_RETURN(Instance instance, Instance::WithTotalDemand(
                                              q, std::move(capacities), delta));
      instances.push_back(std::move(instance));
    }
    return instances;
  }

  std::vector<int64_t> prefix;
  for (int64_t q = spec.q.lo; q <= spec.q.hi; ++q) {
    for (int64_t n = spec.n.lo; n <= spec.n.hi; ++n) {
      AppendCapacityTuples(spec, q, n, prefix, instances);
    }
  }
  return instances;
}

absl::StatusOr<SweepReport> Sweep(const GridSpec& spec,
                                  const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RETURN_IF_ERROR(ValidateGridSpec(spec));
  RETURN_IF_ERROR(CheckOracleLimits(spec, options));
  ASSIGN_OR_RETURN(const std::vector<Instance> instances,
                   EnumerateInstances(spec));

  std::vector<InstanceOutcome> outcomes(instances.size());
  const auto run_range = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      auto checked = CheckInstance(static_cast<int64_t>(i), instances[i],
                                   options);
      if (!checked.ok()) {
        outcomes[i].status = checked.status();
        continue;
      }
      outcomes[i].mismatch = *std::move(checked);
      outcomes[i].single_depot_checked = SingleDepotChecked(
          instances[i], options.brute_force.single_depot_limits);
    }
  };

  const size_t workers = std::clamp<size_t>(
      options.workers < 1 ? 1 : options.workers, 1,
      std::max<size_t>(instances.size(), 1));
  if (workers == 1) {
    run_range(0, instances.size());
  } else {
    std::vector<std::thread> threads;
    const size_t chunk = (instances.size() + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      const size_t begin = std::min(instances.size(), w * chunk);
      const size_t end = std::min(instances.size(), begin + chunk);
      threads.emplace_back(run_range, begin, end);
    }
    for (std::thread& thread : threads) thread.join();
  }

  SweepReport report{.spec = spec};
  for (InstanceOutcome& outcome : outcomes) {
    RETURN_IF_ERROR(outcome.status);
    ++report.instances_checked;
    if (outcome.single_depot_checked) ++report.single_depot_checks;
    if (outcome.mismatch.has_value()) {
      report.mismatches.push_back(*std::move(outcome.mismatch));
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

nlohmann::ordered_json GridSpecToJson(const GridSpec& spec) {
  nlohmann::ordered_json json;
  json["q"] = RangeToJson(spec.q);
  json["n"] = RangeToJson(spec.n);
  json["c"] = RangeToJson(spec.c);
  json["delta"] = RangeToJson(spec.delta);
  if (const auto* sample = std::get_if<RandomSample>(&spec.mode)) {
    json["mode"] = {{"sample", {{"count", sample->count},
                                {"seed", sample->seed}}}};
  } else {
    json["mode"] = "exhaustive";
  }
  return json;
}

nlohmann::ordered_json SweepReportToJson(const SweepReport& report) {
  nlohmann::ordered_json json;
  json["spec"] = GridSpecToJson(report.spec);
  json["instances_checked"] = report.instances_checked;
  json["single_depot_checks"] = report.single_depot_checks;
  json["mismatches"] = nlohmann::ordered_json::array();
  for (const Mismatch& m : report.mismatches) {
    nlohmann::ordered_json entry;
    entry["index"] = m.index;
    entry["instance"] = {
        {"vehicle_capacity", m.instance.vehicle_capacity()},
        {"depot_capacities",
         std::vector<int64_t>(m.instance.depot_capacities().begin(),
                              m.instance.depot_capacities().end())},
        {"total_demand", m.instance.total_demand()}};
    entry["closed_form"] = m.closed_form;
    entry["dynamic_program"] = m.dynamic_program;
    entry["brute_force"] = m.brute_force;
    if (m.single_depot_closed_form.has_value()) {
      entry["single_depot_closed_form"] = *m.single_depot_closed_form;
      entry["single_depot_brute_force"] = *m.single_depot_brute_force;
    }
    json["mismatches"].push_back(std::move(entry));
  }
  json["elapsed_ms"] = report.elapsed_ms;
  return json;
}

}  // namespace fleetbound
