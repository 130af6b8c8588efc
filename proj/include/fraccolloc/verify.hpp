#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fraccolloc {

/// Outcome of a single verification check: `measured` against `bound`
/// (lower-is-better unless stated otherwise in `detail`).
struct CheckResult {
  std::string name;
  bool passed;
  double measured;
  double bound;
  std::string detail;
};

/// Run one verification suite: "splines", "fracderiv", "symbol", "assembly",
/// or "all" (which adds the spectra and convergence checks on top of the
/// four named groups). The seed drives every randomized check.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

} // namespace fraccolloc
