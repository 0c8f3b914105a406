#include "fleetbound/result_io.h"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "fleetbound/status_macros.h"

namespace fleetbound {
namespace {

using OrderedJson = nlohmann::ordered_json;

std::string CsvField(absl::string_view text) {
  if (text.find_first_of(",\"\r\n") == absl::string_view::npos) {
    return std::string(text);
  }
  std::string quoted = "\"";
  for (const char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

// Left-aligns the first column and right-aligns the rest.
std::string RenderTable(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      const std::string pad(widths[i] - row[i].size(), ' ');
      if (i == 0) {
        absl::StrAppend(&line, row[i], pad);
      } else {
        absl::StrAppend(&line, "  ", pad, row[i]);
      }
    }
    absl::StrAppend(&out, line, "\n");
  }
  return out;
}

std::string OptionalCell(const std::optional<int64_t>& value) {
  return value.has_value() ? absl::StrCat(*value) : "-";
}

std::string JsonLines(absl::Span<const ResultRecord> records) {
  std::string out;
  for (const ResultRecord& record : records) {
    absl::StrAppend(&out,
                    ResultToJson(record).dump(
                        -1, ' ', false,
                        nlohmann::ordered_json::error_handler_t::replace),
                    "\n");
  }
  return out;
}

absl::StatusOr<int64_t> RequiredInt(const nlohmann::json& json,
                                    absl::string_view key) {
  const auto it = json.find(key);
  if (it == json.end() || !it->is_number_integer()) {
    return absl::InvalidArgumentError(
        absl::StrCat("result: missing integer field '", key, "'"));
  }
  return it->get<int64_t>();
}

absl::StatusOr<std::vector<int64_t>> RequiredIntList(
    const nlohmann::json& json, absl::string_view key) {
  const auto it = json.find(key);
  if (it == json.end() || !it->is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("result: missing array field '", key, "'"));
  }
  std::vector<int64_t> out;
  for (const auto& value : *it) {
    if (!value.is_number_integer()) {
      return absl::InvalidArgumentError(
          absl::StrCat("result: non-integer entry in '", key, "'"));
    }
    out.push_back(value.get<int64_t>());
  }
  return out;
}

}  // namespace

absl::StatusOr<OutputFormat> ParseOutputFormat(absl::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "table") return OutputFormat::kTable;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown output format '", name, "'"));
}

absl::StatusOr<ResultRecord> ComputeResult(const Instance& instance,
                                           std::string name,
                                           bool with_witness) {
  ResultRecord record{.name = std::move(name),
                      .q = instance.vehicle_capacity(),
                      .n = instance.num_depots(),
                      .delta = instance.total_demand()};
  ASSIGN_OR_RETURN(record.bound, MultiDepotBound(instance));
  ASSIGN_OR_RETURN(record.comparison, CompareWithTrivialBounds(instance));
  if (with_witness) {
    ASSIGN_OR_RETURN(record.witness, MakeMultiDepotWitness(instance));
  }
  return record;
}

OrderedJson ResultToJson(const ResultRecord& record) {
  OrderedJson json;
  json["name"] = record.name;
  json["q"] = record.q;
  json["n"] = record.n;
  json["delta"] = record.delta;
  json["bound"] = record.bound.value;
  json["case"] = BoundCaseName(record.bound.bound_case);
  if (record.bound.pivot.has_value()) {
    json["ell"] = record.bound.pivot->ell;
    json["lambda"] = record.bound.pivot->lambda;
  }
  if (record.comparison.per_point_ceiling.has_value()) {
    json["per_point_ceiling"] = *record.comparison.per_point_ceiling;
  }
  json["labbe"] = record.comparison.labbe;
  json["archetti"] = record.comparison.archetti;
  if (record.witness.has_value()) {
    json["allocations"] = record.witness->allocations;
    json["per_depot_vehicles"] = record.witness->per_depot_vehicles;
  }
  return json;
}

absl::StatusOr<ResultRecord> ParseResultJson(absl::string_view text) {
  const nlohmann::json json =
      nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (json.is_discarded() || !json.is_object()) {
    return absl::InvalidArgumentError("result: not a JSON object");
  }
  ResultRecord record;
  const auto name = json.find("name");
  if (name == json.end() || !name->is_string()) {
    return absl::InvalidArgumentError("result: missing string field 'name'");
  }
  record.name = name->get<std::string>();
  ASSIGN_OR_RETURN(record.q, RequiredInt(json, "q"));
  ASSIGN_OR_RETURN(record.n, RequiredInt(json, "n"));
  ASSIGN_OR_RETURN(record.delta, RequiredInt(json, "delta"));
  ASSIGN_OR_RETURN(record.bound.value, RequiredInt(json, "bound"));
  const auto bound_case = json.find("case");
  if (bound_case == json.end() || !bound_case->is_string() ||
      !ParseBoundCase(bound_case->get<std::string>()).has_value()) {
    return absl::InvalidArgumentError("result: missing or unknown 'case'");
  }
  record.bound.bound_case = *ParseBoundCase(bound_case->get<std::string>());
  if (json.contains("ell")) {
    PivotTrace pivot;
    ASSIGN_OR_RETURN(pivot.ell, RequiredInt(json, "ell"));
    ASSIGN_OR_RETURN(pivot.lambda, RequiredInt(json, "lambda"));
    record.bound.pivot = pivot;
  }
  record.comparison.proposed = record.bound.value;
  if (json.contains("per_point_ceiling")) {
    ASSIGN_OR_RETURN(record.comparison.per_point_ceiling,
                     RequiredInt(json, "per_point_ceiling"));
  }
  ASSIGN_OR_RETURN(record.comparison.labbe, RequiredInt(json, "labbe"));
  ASSIGN_OR_RETURN(record.comparison.archetti, RequiredInt(json, "archetti"));
  if (json.contains("allocations")) {
    DepotAllocation witness;
    ASSIGN_OR_RETURN(witness.allocations, RequiredIntList(json, "allocations"));
    ASSIGN_OR_RETURN(witness.per_depot_vehicles,
                     RequiredIntList(json, "per_depot_vehicles"));
    record.witness = std::move(witness);
  }
  return record;
}

std::string SerializeResults(absl::Span<const ResultRecord> records,
                             OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return JsonLines(records);
    case OutputFormat::kCsv: {
      std::string out = absl::StrCat(kBoundCsvHeader, "\n");
      for (const ResultRecord& r : records) {
        absl::StrAppend(&out, CsvField(r.name), ",", r.q, ",", r.n, ",",
                        r.delta, ",", r.bound.value, ",",
                        BoundCaseName(r.bound.bound_case), ",",
                        r.comparison.labbe, ",", r.comparison.archetti, "\n");
      }
      return out;
    }
    case OutputFormat::kTable: {
      const bool with_witness =
          std::any_of(records.begin(), records.end(),
                      [](const ResultRecord& r) { return r.witness.has_value(); });
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"name", "q", "n", "delta", "bound", "case", "ell",
                      "lambda"});
      if (with_witness) rows.back().push_back("allocations");
      for (const ResultRecord& r : records) {
        const auto& pivot = r.bound.pivot;
        rows.push_back(
            {r.name, absl::StrCat(r.q), absl::StrCat(r.n),
             absl::StrCat(r.delta), absl::StrCat(r.bound.value),
             std::string(BoundCaseName(r.bound.bound_case)),
             OptionalCell(pivot ? std::optional(pivot->ell) : std::nullopt),
             OptionalCell(pivot ? std::optional(pivot->lambda)
                                : std::nullopt)});
        if (with_witness) {
          rows.back().push_back(
              r.witness ? absl::StrJoin(r.witness->allocations, " ") : "-");
        }
      }
      return RenderTable(rows);
    }
  }
  return "";
}

std::string SerializeResult(const ResultRecord& record, OutputFormat format) {
  return SerializeResults(absl::MakeConstSpan(&record, 1), format);
}

std::string SerializeComparisons(absl::Span<const ResultRecord> records,
                                 OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return JsonLines(records);
    case OutputFormat::kCsv: {
      std::string out = absl::StrCat(kComparisonCsvHeader, "\n");
      for (const ResultRecord& r : records) {
        const auto& per_point = r.comparison.per_point_ceiling;
        absl::StrAppend(&out, CsvField(r.name), ",", r.q, ",", r.n, ",",
                        r.delta, ",", r.comparison.proposed, ",",
                        per_point ? absl::StrCat(*per_point) : "", ",",
                        r.comparison.labbe, ",", r.comparison.archetti, "\n");
      }
      return out;
    }
    case OutputFormat::kTable: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"name", "q", "n", "delta", "proposed",
                      "per_point_ceiling", "labbe", "archetti"});
      for (const ResultRecord& r : records) {
        rows.push_back({r.name, absl::StrCat(r.q), absl::StrCat(r.n),
                        absl::StrCat(r.delta),
                        absl::StrCat(r.comparison.proposed),
                        OptionalCell(r.comparison.per_point_ceiling),
                        absl::StrCat(r.comparison.labbe),
                        absl::StrCat(r.comparison.archetti)});
      }
      return RenderTable(rows);
    }
  }
  return "";
}

}  // namespace fleetbound
