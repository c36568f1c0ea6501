#pragma once

#include <map>
#include <string>
#include <vector>

namespace nckc {

// One measured invariant. `measured` is the worst residual over the cases
// listed in `detail`; the check passes when measured < tolerance.
struct CheckRecord {
  std::string suite;
  std::string check;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

// Tolerance overrides keyed by "suite.check" or by "suite" (all checks of the
// suite). The more specific key wins.
using ToleranceOverrides = std::map<std::string, double>;

/// spectrum, radial, gram, eigen, smatrix, expansion, amplitude
const std::vector<std::string>& validation_suites();

/// Runs one suite. Throws DomainError for an unknown name.
std::vector<CheckRecord> run_suite(const std::string& suite, const ToleranceOverrides& tol = {});

}  // namespace nckc
