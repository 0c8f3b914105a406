#ifndef FLEETBOUND_STATUS_MACROS_H_
#define FLEETBOUND_STATUS_MACROS_H_

#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define FLEETBOUND_STATUS_CONCAT_INNER(a, b) a##b
#define FLEETBOUND_STATUS_CONCAT(a, b) FLEETBOUND_STATUS_CONCAT_INNER(a, b)

#define RETURN_IF_ERROR(expr)                        \
  do {                                               \
    const absl::Status _fleetbound_status = (expr);  \
    if (!_fleetbound_status.ok()) {                  \
      return _fleetbound_status;                     \
    }                                                \
  } while (0)

#define ASSIGN_OR_RETURN_IMPL(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                          \
  if (!statusor.ok()) {                             \
    return statusor.status();                       \
  }                                                 \
  lhs = std::move(statusor).value()

// Evaluates an expression returning absl::StatusOr<T>. On error returns the
// status from the enclosing function, otherwise assigns the value to `lhs`.
#define ASSIGN_OR_RETURN(lhs, rexpr) \
  ASSIGN_OR_RETURN_IMPL(             \
      FLEETBOUND_STATUS_CONCAT(_fleetbound_statusor_, __LINE__), lhs, rexpr)

#endif  // FLEETBOUND_STATUS_MACROS_H_
