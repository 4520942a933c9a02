#pragma once

// Invariant suite behind `rootforge verify`: group orders and classes,
// induction counts, Cartan matrices, splits, invariance and the Coxeter
// plane. The report text is deterministic.

#include <string>
#include <vector>

#include "rootforge/rootsys.hpp"

namespace rootforge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t passed() const;
  std::string text() const;
};

VerifyReport run_verification();

/// Axiom and identification checks for a single root system.
VerifyReport verify_root_system(const RootSystem& rs);

}  // namespace rootforge
