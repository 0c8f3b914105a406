#ifndef FLEETBOUND_TESTS_TABLE_ROWS_H_
#define FLEETBOUND_TESTS_TABLE_ROWS_H_

#include <cstdint>
#include <vector>

#include "fleetbound/instance.h"

namespace fleetbound::testing {

// A row of the closed-form case table whose condition holds for an instance,
// with the row's own formula evaluated directly.
struct TableRowValue {
  int row = 0;  // 1..4 in table order
  int64_t value = 0;
};

// Every matching row; neighbouring rows overlap at their boundaries. The
// general row recomputes every residual budget explicitly and picks the last
// positive one, rather than scanning with an early exit.
std::vector<TableRowValue> MatchingTableRows(const Instance& instance);

}  // namespace fleetbound::testing

#endif  // FLEETBOUND_TESTS_TABLE_ROWS_H_
