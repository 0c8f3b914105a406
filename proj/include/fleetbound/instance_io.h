#ifndef FLEETBOUND_INSTANCE_IO_H_
#define FLEETBOUND_INSTANCE_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "fleetbound/instance.h"

namespace fleetbound {

enum class InstanceFormat { kJson, kPlain };

// File-level view of an instance. Parsing enforces every Instance invariant
// plus a non-empty depot list.
//
// JSON:
//   {"name": "...", "vehicle_capacity": 4, "depot_capacities": [10, 10],
//    "demands": [4, 4, 4, 4, 4], "total_demand": 20}
// Plain (one directive per line, any order, each at most once, '#' starts a
// comment):
//   name <identifier>
//   q <int>
//   depots <int>+
//   demands <int>+
//   total <int>
struct InstanceDocument {
  int64_t vehicle_capacity = 1;
  std::vector<int64_t> depot_capacities;
  std::optional<std::vector<int64_t>> demands;
  std::optional<int64_t> total_demand;
  std::optional<std::string> name;

  friend bool operator==(const InstanceDocument&,
                         const InstanceDocument&) = default;
};

absl::StatusOr<InstanceDocument> ParseInstanceDocument(absl::string_view text,
                                                       InstanceFormat format);

// JSON when the first non-blank character is '{', Plain otherwise.
InstanceFormat DetectInstanceFormat(absl::string_view text);

absl::StatusOr<Instance> ToInstance(const InstanceDocument& document);

absl::StatusOr<Instance> ParseInstance(absl::string_view text,
                                       InstanceFormat format);

std::string SerializeInstance(const InstanceDocument& document,
                              InstanceFormat format);

InstanceDocument ToDocument(const Instance& instance,
                            std::optional<std::string> name = std::nullopt);

}  // namespace fleetbound

#endif  // FLEETBOUND_INSTANCE_IO_H_
