#pragma once

// Named exhaustive checks of the number/skein identities. Each check is exact
// over its index range and reports the first counterexample it meets.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotqp/json_io.hpp"

namespace knotqp {

struct CheckReport {
  std::string name;
  bool passed = false;
  std::string detail;
  int n_max = 0;
  // Only set by eq34-multiplier: whether the computed HOMFLY/Jones multiplier
  // equals the printed (aq)^{2(n-1)} with q = t.
  std::optional<bool> printed_form_matches;
};

// Registry order.
std::span<const std::string_view> check_names();

// Throws UnknownCheck, or BadRange when n_max < 1.
CheckReport run_check(std::string_view name, int n_max);

// Every registered check, in registry order. Checks run concurrently when
// `parallel` is set.
std::vector<CheckReport> run_all(int n_max, bool parallel = true);

Json to_json(const CheckReport& r);

}  // namespace knotqp
