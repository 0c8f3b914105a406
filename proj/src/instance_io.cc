#include "fleetbound/instance_io.h"

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include "absl/strings/string_view.h"
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "fleetbound/checked_math.h"
#include "fleetbound/status_macros.h"
#include "json.hpp"

namespace fleetbound {
namespace {

using Json = nlohmann::json;

absl::Status FieldError(absl::string_view where, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat(where, ": ", message));
}

// Shared semantic checks. `where` locates each field in the source text.
struct FieldLocations {
  std::string vehicle_capacity = "vehicle_capacity";
  std::string depot_capacities = "depot_capacities";
  std::string demands = "demands";
  std::string total_demand = "total_demand";
  std::string document = "instance";
};

absl::Status ValidateDocument(const InstanceDocument& doc,
                              const FieldLocations& where) {
  if (doc.vehicle_capacity < 1) {
    return FieldError(where.vehicle_capacity,
                      absl::StrCat("vehicle_capacity must be ≥ 1, got ",
                                   doc.vehicle_capacity));
  }
  if (doc.depot_capacities.empty()) {
    return FieldError(where.depot_capacities,
                      "depot_capacities must list at least one depot");
  }
  for (size_t i = 0; i < doc.depot_capacities.size(); ++i) {
    if (doc.depot_capacities[i] < 1) {
      return FieldError(
          absl::StrCat(where.depot_capacities, "[", i, "]"),
          absl::StrCat("depot capacity must be ≥ 1, got ",
                       doc.depot_capacities[i]));
    }
  }
  if (!doc.demands.has_value() && !doc.total_demand.has_value()) {
    return FieldError(where.document,
                      "one of demands / total_demand is required");
  }
  if (doc.total_demand.has_value() && *doc.total_demand < 0) {
    return FieldError(where.total_demand,
                      absl::StrCat("total_demand must be ≥ 0, got ",
                                   *doc.total_demand));
  }
  if (doc.demands.has_value()) {
    int64_t sum = 0;
    for (size_t i = 0; i < doc.demands->size(); ++i) {
      const int64_t d = (*doc.demands)[i];
      if (d < 0) {
        return FieldError(absl::StrCat(where.demands, "[", i, "]"),
                          absl::StrCat("demand must be ≥ 0, got ", d));
      }
      auto next = CheckedAdd(sum, d, "sum of demands");
      if (!next.ok()) return FieldError(where.demands, next.status().message());
      sum = *next;
    }
    if (doc.total_demand.has_value() && *doc.total_demand != sum) {
      return FieldError(where.total_demand,
                        absl::StrCat("total_demand ", *doc.total_demand,
                                     " does not match the sum of demands ",
                                     sum));
    }
  }
  return absl::OkStatus();
}

// ---------------------------------------------------------------------------
// JSON

absl::StatusOr<int64_t> JsonInteger(const Json& value, absl::string_view where) {
  if (value.is_number_unsigned()) {
    const uint64_t raw = value.get<uint64_t>();
    if (raw > static_cast<uint64_t>(kMaxQuantity)) {
      return FieldError(where, "value out of 63-bit range");
    }
    return static_cast<int64_t>(raw);
  }
  if (value.is_number_integer()) return value.get<int64_t>();
  if (value.is_number_float()) {
    return FieldError(where, "expected an integer in the 63-bit range");
  }
  return FieldError(where, absl::StrCat("expected an integer, got ",
                                        value.type_name()));
}

absl::StatusOr<std::vector<int64_t>> JsonIntegerList(const Json& value,
                                                     absl::string_view where) {
  if (!value.is_array()) {
    return FieldError(where, absl::StrCat("expected an array, got ",
                                          value.type_name()));
  }
  std::vector<int64_t> out;
  out.reserve(value.size());
  for (size_t i = 0; i < value.size(); ++i) {
    ASSIGN_OR_RETURN(const int64_t v,
                     JsonInteger(value[i], absl::StrCat(where, "[", i, "]")));
    out.push_back(v);
  }
  return out;
}

absl::StatusOr<InstanceDocument> ParseJsonDocument(absl::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed JSON: ",
                                                   e.what()));
  }
  if (!root.is_object()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "instance: expected a JSON object, got ", root.type_name()));
  }

  InstanceDocument doc;
  bool has_capacity = false;
  bool has_depots = false;
  for (const auto& [key, value] : root.items()) {
    if (key == "vehicle_capacity") {
      ASSIGN_OR_RETURN(doc.vehicle_capacity, JsonInteger(value, key));
      has_capacity = true;
    } else if (key == "depot_capacities") {
      ASSIGN_OR_RETURN(doc.depot_capacities, JsonIntegerList(value, key));
      has_depots = true;
    } else if (key == "demands") {
      ASSIGN_OR_RETURN(doc.demands, JsonIntegerList(value, key));
    } else if (key == "total_demand") {
      ASSIGN_OR_RETURN(doc.total_demand, JsonInteger(value, key));
    } else if (key == "name") {
      if (!value.is_string()) {
        return FieldError(key, absl::StrCat("expected a string, got ",
                                            value.type_name()));
      }
      doc.name = value.get<std::string>();
    } else {
      return FieldError(key, "unknown field");
    }
  }
  if (!has_capacity) {
    return FieldError("vehicle_capacity", "missing required field");
  }
  if (!has_depots) {
    return FieldError("depot_capacities", "missing required field");
  }
  RETURN_IF_ERROR(ValidateDocument(doc, FieldLocations{}));
  return doc;
}

// ---------------------------------------------------------------------------
// Plain

absl::StatusOr<int64_t> PlainInteger(absl::string_view token,
                                     absl::string_view where) {
  int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    return FieldError(where, absl::StrCat("'", token,
                                          "' is out of 63-bit range"));
  }
  if (ec != std::errc() || ptr != last) {
    return FieldError(where, absl::StrCat("'", token, "' is not an integer"));
  }
  return value;
}

absl::StatusOr<InstanceDocument> ParsePlainDocument(absl::string_view text) {
  InstanceDocument doc;
  FieldLocations where;
  int q_line = 0;
  int depots_line = 0;
  int demands_line = 0;
  int total_line = 0;
  int name_line = 0;

  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    if (const size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;

    std::vector<absl::string_view> tokens =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r\f\v"), absl::SkipEmpty());
    const absl::string_view directive = tokens.front();
    const std::string here = absl::StrCat("line ", line_number);
    const auto once = [&](int& seen) -> absl::Status {
      if (seen != 0) {
        return FieldError(here, absl::StrCat("duplicate '", directive,
                                             "' directive (first on line ",
                                             seen, ")"));
      }
      seen = line_number;
      return absl::OkStatus();
    };
    // `arity` 1: exactly one value; 0: any number; -1: at least one.
    const auto values = [&](int arity) -> absl::StatusOr<std::vector<int64_t>> {
      const size_t count = tokens.size() - 1;
      if ((arity == 1 && count != 1) || (arity == -1 && count == 0)) {
        return FieldError(here, absl::StrCat("'", directive, "' expects ",
                                             arity == 1 ? "one integer"
                                                        : "integers"));
      }
      std::vector<int64_t> out;
      for (size_t i = 1; i < tokens.size(); ++i) {
        ASSIGN_OR_RETURN(const int64_t v, PlainInteger(tokens[i], here));
        out.push_back(v);
      }
      return out;
    };

    if (directive == "q") {
      RETURN_IF_ERROR(once(q_line));
      ASSIGN_OR_RETURN(const auto v, values(1));
      doc.vehicle_capacity = v[0];
      where.vehicle_capacity = here;
    } else if (directive == "depots") {
      RETURN_IF_ERROR(once(depots_line));
      ASSIGN_OR_RETURN(doc.depot_capacities, values(-1));
      where.depot_capacities = absl::StrCat(here, ": depots");
    } else if (directive == "demands") {
      RETURN_IF_ERROR(once(demands_line));
      ASSIGN_OR_RETURN(doc.demands, values(0));
      where.demands = absl::StrCat(here, ": demands");
    } else if (directive == "total") {
      RETURN_IF_ERROR(once(total_line));
      ASSIGN_OR_RETURN(const auto v, values(1));
      doc.total_demand = v[0];
      where.total_demand = here;
    } else if (directive == "name") {
      RETURN_IF_ERROR(once(name_line));
      if (tokens.size() < 2) {
        return FieldError(here, "'name' expects an identifier");
      }
      doc.name = std::string(
          absl::StripAsciiWhitespace(line.substr(directive.size())));
    } else {
      return FieldError(here,
                        absl::StrCat("unknown directive '", directive, "'"));
    }
  }
  if (q_line == 0) return FieldError("q", "missing required directive");
  if (depots_line == 0) {
    return FieldError("depots", "missing required directive");
  }
  RETURN_IF_ERROR(ValidateDocument(doc, where));
  return doc;
}

}  // namespace

absl::StatusOr<InstanceDocument> ParseInstanceDocument(absl::string_view text,
                                                       InstanceFormat format) {
  switch (format) {
    case InstanceFormat::kJson:
      return ParseJsonDocument(text);
    case InstanceFormat::kPlain:
      return ParsePlainDocument(text);
  }
  return absl::InvalidArgumentError("unknown instance format");
}

InstanceFormat DetectInstanceFormat(absl::string_view text) {
  for (const char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? InstanceFormat::kJson : InstanceFormat::kPlain;
  }
  return InstanceFormat::kPlain;
}

absl::StatusOr<Instance> ToInstance(const InstanceDocument& document) {
  if (document.depot_capacities.empty()) {
    return absl::InvalidArgumentError(
        "depot_capacities must list at least one depot");
  }
  return Instance::Create(document.vehicle_capacity,
                          document.depot_capacities, document.demands,
                          document.total_demand);
}

absl::StatusOr<Instance> ParseInstance(absl::string_view text,
                                       InstanceFormat format) {
  ASSIGN_OR_RETURN(const InstanceDocument document,
                   ParseInstanceDocument(text, format));
  return ToInstance(document);
}

std::string SerializeInstance(const InstanceDocument& document,
                              InstanceFormat format) {
  if (format == InstanceFormat::kJson) {
    nlohmann::ordered_json json;
    if (document.name.has_value()) json["name"] = *document.name;
    json["vehicle_capacity"] = document.vehicle_capacity;
    json["depot_capacities"] = document.depot_capacities;
    if (document.demands.has_value()) json["demands"] = *document.demands;
    if (document.total_demand.has_value()) {
      json["total_demand"] = *document.total_demand;
    }
    return json.dump(-1, ' ', false,
                     nlohmann::ordered_json::error_handler_t::replace) +
           "\n";
  }
  std::string out;
  if (document.name.has_value()) {
    absl::StrAppend(&out, "name ", *document.name, "\n");
  }
  absl::StrAppend(&out, "q ", document.vehicle_capacity, "\n");
  absl::StrAppend(&out, "depots ", absl::StrJoin(document.depot_capacities, " "),
                  "\n");
  if (document.demands.has_value()) {
    absl::StrAppend(&out, "demands ", absl::StrJoin(*document.demands, " "),
                    "\n");
  }
  if (document.total_demand.has_value()) {
    absl::StrAppend(&out, "total ", *document.total_demand, "\n");
  }
  return out;
}

InstanceDocument ToDocument(const Instance& instance,
                            std::optional<std::string> name) {
  InstanceDocument document{
      .vehicle_capacity = instance.vehicle_capacity(),
      .depot_capacities = {instance.depot_capacities().begin(),
                           instance.depot_capacities().end()},
      .demands = instance.demands(),
      .total_demand = instance.total_demand(),
      .name = std::move(name)};
  return document;
}

}  // namespace fleetbound
