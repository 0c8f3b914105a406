#include "fleetbound/cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fleetbound/instance_io.h"
#include "fleetbound/multi_depot.h"
#include "fleetbound/random.h"
#include "fleetbound/result_io.h"
#include "fleetbound/status_macros.h"
#include "fleetbound/sweep.h"

namespace fleetbound {
namespace {

namespace fs = std::filesystem;

absl::StatusOr<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot read ", path.string()));
  }
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) {
    return absl::DataLossError(absl::StrCat("error reading ", path.string()));
  }
  return contents.str();
}

// A single file, or every regular file of a directory in name order.
absl::StatusOr<std::vector<fs::path>> InstancePaths(const std::string& arg) {
  std::error_code ec;
  const fs::path root(arg);
  if (!fs::is_directory(root, ec)) return std::vector<fs::path>{root};
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  if (ec) {
    return absl::NotFoundError(
        absl::StrCat("cannot list ", arg, ": ", ec.message()));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

absl::StatusOr<ResultRecord> ProcessInstanceFile(const fs::path& path,
                                                 bool with_witness) {
  ASSIGN_OR_RETURN(const std::string text, ReadFile(path));
  ASSIGN_OR_RETURN(const InstanceDocument document,
                   ParseInstanceDocument(text, DetectInstanceFormat(text)));
  ASSIGN_OR_RETURN(const Instance instance, ToInstance(document));
  return ComputeResult(instance, document.name.value_or(path.stem().string()),
                       with_witness);
}

// Runs every file; failures are reported per file and do not stop the batch.
int RunInstanceBatch(const std::string& instance_arg,
                     const std::string& format_name, bool with_witness,
                     bool comparison_view, std::ostream& out,
                     std::ostream& err) {
  const auto format = ParseOutputFormat(format_name);
  if (!format.ok()) {
    err << "error: " << format.status().message() << "\n";
    return kExitInputError;
  }
  const auto paths = InstancePaths(instance_arg);
  if (!paths.ok()) {
    err << "error: " << paths.status().message() << "\n";
    return kExitInputError;
  }
  std::vector<ResultRecord> records;
  bool failed = false;
  for (const fs::path& path : *paths) {
    auto record = ProcessInstanceFile(path, with_witness);
    if (!record.ok()) {
      err << "error: " << path.string() << ": " << record.status().message()
          << "\n";
      failed = true;
      continue;
    }
    records.push_back(*std::move(record));
  }
  if (!records.empty()) {
    out << (comparison_view ? SerializeComparisons(records, *format)
                            : SerializeResults(records, *format));
  }
  return failed ? kExitInputError : kExitOk;
}

struct VerifyArgs {
  int64_t q_max = 4;
  int64_t n_max = 2;
  int64_t c_max = 8;
  int64_t delta_max = 16;
  int64_t sample = 0;
  uint64_t seed = 7;
  int workers = 1;
  bool json = false;
  bool inject_fault = false;
};

int RunVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  GridSpec spec{.q = {1, args.q_max},
                .n = {1, args.n_max},
                .c = {1, args.c_max},
                .delta = {0, args.delta_max}};
  if (args.sample > 0) {
    spec.mode = RandomSample{.count = args.sample, .seed = args.seed};
  }
  SweepOptions options{.workers = args.workers};
  const auto dp = DpOptionsFromEnvironment();
  if (!dp.ok()) {
    err << "error: " << dp.status().message() << "\n";
    return kExitInputError;
  }
  options.dp = *dp;
  if (args.inject_fault) {
    options.closed_form_override =
        [](const Instance& instance) -> absl::StatusOr<int64_t> {
      ASSIGN_OR_RETURN(const FleetBound bound, MultiDepotBound(instance));
      return bound.value + (instance.total_demand() > 0 ? 1 : 0);
    };
  }

  const auto report = Sweep(spec, options);
  if (!report.ok()) {
    err << "error: " << report.status().message() << "\n";
    return kExitInputError;
  }
  if (args.json) {
    out << SweepReportToJson(*report).dump(2) << "\n";
  } else {
    const nlohmann::ordered_json spec_json = GridSpecToJson(spec);
    out << "grid: " << spec_json.dump() << "\n"
        << "instances checked: " << report->instances_checked << "\n"
        << "single-depot checks: " << report->single_depot_checks << "\n";
    const nlohmann::ordered_json full = SweepReportToJson(*report);
    for (const auto& mismatch : full["mismatches"]) {
      out << "mismatch: " << mismatch.dump() << "\n";
    }
    out << report->mismatches.size() << " mismatches\n"
        << "elapsed_ms: " << report->elapsed_ms << "\n";
  }
  return report->mismatches.empty() ? kExitOk : kExitMismatch;
}

int RunBenchCommand(const BenchOptions& options, std::ostream& out,
                    std::ostream& err) {
  const auto result = RunBench(options);
  if (!result.ok()) {
    err << "error: " << result.status().message() << "\n";
    return kExitInputError;
  }
  out << "n: " << options.num_depots << "\n"
      << "seed: " << options.seed << "\n"
      << "q: " << options.q << "\n"
      << "c_max: " << options.max_capacity << "\n"
      << "delta: " << options.total_demand << "\n"
      << "bound: " << result->bound.value << "\n"
      << "case: " << BoundCaseName(result->bound.bound_case) << "\n"
      << "elapsed_ms: " << result->elapsed_ms << "\n";
  return kExitOk;
}

}  // namespace

absl::StatusOr<DpOptions> DpOptionsFromEnvironment() {
  DpOptions options;
  const char* raw = std::getenv(kCellBudgetEnvVar);
  if (raw == nullptr) return options;
  const absl::string_view text(raw);
  int64_t budget = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), budget);
  if (ec != std::errc() || ptr != text.data() + text.size() || budget < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        kCellBudgetEnvVar, " must be a positive integer, got '", text, "'"));
  }
  options.cell_budget = budget;
  return options;
}

std::vector<int64_t> BenchCapacities(const BenchOptions& options) {
  Lcg64 rng(options.seed);
  std::vector<int64_t> capacities(options.num_depots);
  for (int64_t& c : capacities) c = rng.Uniform(1, options.max_capacity);
  return capacities;
}

absl::StatusOr<BenchResult> RunBench(const BenchOptions& options) {
  if (options.num_depots < 1) {
    return absl::InvalidArgumentError("bench needs --n >= 1");
  }
  if (options.max_capacity < 1) {
    return absl::InvalidArgumentError("bench needs --c-max >= 1");
  }
  if (options.repeat < 1) {
    return absl::InvalidArgumentError("bench needs --repeat >= 1");
  }
  // Refuse before allocating absurd capacity vectors.
  constexpr int64_t kMaxBenchDepots = int64_t{1} << 31;
  if (options.num_depots > kMaxBenchDepots) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "bench refuses more than ", kMaxBenchDepots, " depots"));
  }
  ASSIGN_OR_RETURN(const Instance instance,
                   Instance::WithTotalDemand(options.q,
                                             BenchCapacities(options),
                                             options.total_demand));
  BenchResult result;
  result.elapsed_ms = std::numeric_limits<double>::infinity();
  for (int i = 0; i < options.repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    ASSIGN_OR_RETURN(result.bound, MultiDepotBound(instance));
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    result.elapsed_ms = std::min(result.elapsed_ms, ms);
  }
  return result;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Tight fleet-size bounds for split-delivery routing with "
               "capacitated depots"};
  app.name("fleetbound");
  app.require_subcommand(1);

  std::string instance_arg;
  std::string format = "table";
  bool with_witness = false;

  auto* bound = app.add_subcommand("bound", "Compute the fleet bound");
  bound->add_option("--instance", instance_arg, "Instance file or directory")
      ->required();
  bound->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  bound->add_flag("--witness", with_witness,
                  "Include the per-depot allocation attaining the bound");

  auto* compare =
      app.add_subcommand("compare", "Compare against the classical bounds");
  compare->add_option("--instance", instance_arg, "Instance file or directory")
      ->required();
  compare->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check the closed form against the exhaustive oracles");
  verify->add_option("--q-max", verify_args.q_max, "Largest vehicle capacity")
      ->check(CLI::PositiveNumber);
  verify->add_option("--n-max", verify_args.n_max, "Largest depot count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--c-max", verify_args.c_max, "Largest depot capacity")
      ->check(CLI::PositiveNumber);
  verify->add_option("--delta-max", verify_args.delta_max,
                     "Largest total demand")
      ->check(CLI::NonNegativeNumber);
  auto* sample = verify->add_option("--sample", verify_args.sample,
                                    "Draw this many random instances")
                     ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "Sampling seed")
      ->needs(sample);
  verify->add_option("--workers", verify_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", verify_args.json, "Print the JSON report");
  verify->add_flag("--inject-fault", verify_args.inject_fault)->group("");

  BenchOptions bench_options;
  auto* bench = app.add_subcommand("bench", "Time the closed form");
  bench->add_option("--n", bench_options.num_depots, "Number of depots")
      ->required();
  bench->add_option("--seed", bench_options.seed, "Capacity seed");
  bench->add_option("--q", bench_options.q, "Vehicle capacity")
      ->check(CLI::PositiveNumber);
  bench->add_option("--c-max", bench_options.max_capacity,
                    "Largest depot capacity");
  bench->add_option("--delta", bench_options.total_demand, "Total demand")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--repeat", bench_options.repeat,
                    "Repetitions; the fastest is reported");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("fleetbound");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& arg : storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (bound->parsed()) {
    return RunInstanceBatch(instance_arg, format, with_witness,
                            /*comparison_view=*/false, out, err);
  }
  if (compare->parsed()) {
    return RunInstanceBatch(instance_arg, format, /*with_witness=*/false,
                            /*comparison_view=*/true, out, err);
  }
  if (verify->parsed()) return RunVerify(verify_args, out, err);
  if (bench->parsed()) return RunBenchCommand(bench_options, out, err);
  return kExitInputError;
}

}  // namespace fleetbound
