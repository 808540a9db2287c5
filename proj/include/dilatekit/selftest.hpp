#pragma once

#include <cstdint>
#include <string>

namespace dilatekit {

struct SelftestReport {
  bool passed = false;
  std::string csv;  // deterministic for a fixed seed: no timing, %.17g values
};

/// Runs the residue-oracle, Nagy-compression and Trotter-slope suites on
/// seeded random instances. Every CSV row is a check "value <= bound".
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace dilatekit
