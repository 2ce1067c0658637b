#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rkhs/closed_forms.hpp"

namespace rkhs {

struct VerifyConfig {
  std::string family = "all";
  int n = 10;
  double a = 2.0;
  double lambda = 1.0;
  double q = 2.0;
  int p = 1;
  std::uint64_t seed = 42;  // Blaschke roots
  /// binary64 sums lose about log10(sum |Z_j|) digits; "auto" switches the
  /// sum-based formula paths to extended precision once sum |Z_j| > 1e4.
  std::string precision = "auto";
};

/// Families: fock-general, fock-classical, rbf-first, rbf-second,
/// rbf-classical-first, rbf-classical-second, ml, touchard, touchard-p1, blaschke.
const std::vector<std::string>& verify_families();

/// One report per requested family ("all" runs every family).
std::vector<OutputFormulaReport> run_verification(const VerifyConfig& config);

}  // namespace rkhs
