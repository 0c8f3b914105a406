#ifndef FLEETBOUND_CHECKED_MATH_H_
#define FLEETBOUND_CHECKED_MATH_H_

#include <cstdint>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace fleetbound {

// All quantities live in the non-negative half of int64_t (63 bits).
inline constexpr int64_t kMaxQuantity = INT64_MAX;

inline absl::StatusOr<int64_t> CheckedAdd(int64_t a, int64_t b,
                                          absl::string_view what) {
  int64_t sum;
  if (__builtin_add_overflow(a, b, &sum)) {
    return absl::OutOfRangeError(
        absl::StrCat(what, ": ", a, " + ", b, " overflows 63 bits"));
  }
  return sum;
}

inline absl::StatusOr<int64_t> CheckedMul(int64_t a, int64_t b,
                                          absl::string_view what) {
  int64_t product;
  if (__builtin_mul_overflow(a, b, &product)) {
    return absl::OutOfRangeError(
        absl::StrCat(what, ": ", a, " * ", b, " overflows 63 bits"));
  }
  return product;
}

// Ceiling of a / b for a >= 0 and b >= 1. Never overflows.
constexpr int64_t CeilDiv(int64_t a, int64_t b) {
  return a / b + (a % b != 0 ? 1 : 0);
}

}  // namespace fleetbound

#endif  // FLEETBOUND_CHECKED_MATH_H_
