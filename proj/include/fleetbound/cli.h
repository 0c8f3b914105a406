#ifndef FLEETBOUND_CLI_H_
#define FLEETBOUND_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fleetbound/dynamic_program.h"
#include "fleetbound/vehicle_bounds.h"

namespace fleetbound {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

inline constexpr char kCellBudgetEnvVar[] = "FLEETBOUND_CELL_BUDGET";

// Dynamic-program options with the cell budget taken from the environment
// when FLEETBOUND_CELL_BUDGET is set.
absl::StatusOr<DpOptions> DpOptionsFromEnvironment();

struct BenchOptions {
  int64_t num_depots = 1'000'000;
  uint64_t seed = 1;
  int64_t q = 100;
  int64_t max_capacity = 1'000'000;
  int64_t total_demand = 1'000'000'000'000;
  int repeat = 1;
};

struct BenchResult {
  FleetBound bound;
  // Fastest of the repetitions, timing MultiDepotBound only.
  double elapsed_ms = 0;
};

// Draws depot capacities uniformly from [1, max_capacity] with Lcg64(seed).
std::vector<int64_t> BenchCapacities(const BenchOptions& options);

absl::StatusOr<BenchResult> RunBench(const BenchOptions& options);

// Entry point shared by the binary and the tests. `args` excludes argv[0].
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace fleetbound

#endif  // FLEETBOUND_CLI_H_
