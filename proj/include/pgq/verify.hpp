#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgq/algebra.hpp"

namespace pgq {

enum class CheckStatus { pass, fail, skip, info };

const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string detail;
};

struct BatteryOptions {
  std::uint32_t trials = 100;
  std::uint64_t seed = 0;
};

// The full regression battery over one algebra: identity/associativity of the
// table, the closed-form derivation matrix shape, local and 2-local
// verification, the biderivation classification (l3 != 0 or l3 = 0 branch),
// the commuting-map shape, quasi-centroid and centroid, and the
// centroid/derivation compatibility check. Checks whose parameter
// requirements fail are reported as "skip"; dimension data computed at
// parameter points outside any closed-form statement is reported as "info".
std::vector<CheckResult> run_battery(const StructureTensor& sc, const BatteryOptions& opt);

// True when no check failed (skips and info lines do not count).
bool battery_passed(const std::vector<CheckResult>& results);

}  // namespace pgq
