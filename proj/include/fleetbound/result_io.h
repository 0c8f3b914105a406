#ifndef FLEETBOUND_RESULT_IO_H_
#define FLEETBOUND_RESULT_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "fleetbound/instance.h"
#include "fleetbound/multi_depot.h"
#include "fleetbound/trivial_bounds.h"
#include "fleetbound/vehicle_bounds.h"
#include "json.hpp"

namespace fleetbound {

enum class OutputFormat { kJson, kCsv, kTable };

absl::StatusOr<OutputFormat> ParseOutputFormat(absl::string_view name);

// Everything reported for one instance.
struct ResultRecord {
  std::string name;
  int64_t q = 1;
  int64_t n = 0;
  int64_t delta = 0;
  FleetBound bound;
  std::optional<DepotAllocation> witness;
  BoundComparison comparison;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// Computes bound, comparison and (optionally) witness for one instance.
absl::StatusOr<ResultRecord> ComputeResult(const Instance& instance,
                                           std::string name,
                                           bool with_witness);

inline constexpr absl::string_view kBoundCsvHeader =
    "name,q,n,delta,bound,case,labbe,archetti";
inline constexpr absl::string_view kComparisonCsvHeader =
    "name,q,n,delta,proposed,per_point_ceiling,labbe,archetti";

// One JSON object per record (one per line), a CSV header plus one row per
// record, or an aligned text table. Witness columns appear in the table only
// when the records carry one.
std::string SerializeResults(absl::Span<const ResultRecord> records,
                             OutputFormat format);
std::string SerializeResult(const ResultRecord& record, OutputFormat format);

// Same, but the CSV and table emphasise the bound comparison.
std::string SerializeComparisons(absl::Span<const ResultRecord> records,
                                 OutputFormat format);

nlohmann::ordered_json ResultToJson(const ResultRecord& record);
absl::StatusOr<ResultRecord> ParseResultJson(absl::string_view text);

}  // namespace fleetbound

#endif  // FLEETBOUND_RESULT_IO_H_
