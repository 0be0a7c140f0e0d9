#pragma once

#include <string>
#include <vector>

namespace lipkin {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast analytic-oracle self-tests: closed-form energies and angles,
/// discord closed forms, entropy identities, variational bounds, parity
/// selection rules and the second-difference stencil.
std::vector<CheckResult> run_self_checks();

}  // namespace lipkin
