#pragma once

#include <string>
#include <vector>

#include "rkhs/gram.hpp"
#include "rkhs/kernels.hpp"

namespace rkhs {

/// Training pairs (z_j, w_j) with ridge parameter lambda > 0. Inputs must be
/// pairwise distinct.
class LabeledDataset {
 public:
  LabeledDataset(ComplexVector inputs, ComplexVector outputs, double lambda);

  const ComplexVector& inputs() const noexcept { return inputs_; }
  const ComplexVector& outputs() const noexcept { return outputs_; }
  double lambda() const noexcept { return lambda_; }
  std::size_t size() const noexcept { return inputs_.size(); }

 private:
  ComplexVector inputs_;
  ComplexVector outputs_;
  double lambda_;
};

/// f(z) = sum_j alpha_j K(z, z_j).
class CoefficientExpansion {
 public:
  CoefficientExpansion(ComplexVector centers, ComplexVector coefficients, KernelSpec kernel);

  const ComplexVector& centers() const noexcept { return centers_; }
  const ComplexVector& coefficients() const noexcept { return coefficients_; }
  const KernelSpec& kernel() const noexcept { return kernel_; }
  std::size_t size() const noexcept { return centers_.size(); }

 private:
  ComplexVector centers_;
  ComplexVector coefficients_;
  KernelSpec kernel_;
};

/// Throws ErrorKind::input if two points coincide.
void require_distinct(std::span<const Complex> points, const char* what);

struct FitResult {
  CoefficientExpansion expansion;
  double pivot_ratio;
  std::vector<std::string> warnings;
};

/// Pivot ratio above which fit() attaches a conditioning warning.
inline constexpr double kConditionWarning = 1e12;

/// alpha = (K + lambda I)^{-1} w with K the Gram matrix of the inputs.
FitResult fit(const LabeledDataset& data, const KernelSpec& kernel);

/// w = (K + lambda I) alpha: the outputs for which `target` is the exact
/// regularized minimizer.
ComplexVector reverse_outputs(const CoefficientExpansion& target, double lambda);

Complex evaluate(const CoefficientExpansion& expansion, Complex z);

/// (w - K alpha)^* (w - K alpha) + lambda alpha^* K alpha. Centers must equal
/// the data inputs.
double empirical_risk(const LabeledDataset& data, const CoefficientExpansion& expansion);

/// Same functional written as sum_k |w_k - sum_j alpha_j K(z_k, z_j)|^2 + lambda ||f||^2.
double empirical_risk_expanded(const LabeledDataset& data, const CoefficientExpansion& expansion);

/// -conj(K) conj(w) + conj(K)^2 conj(alpha) + lambda conj(K) conj(alpha), which
/// vanishes at the minimizer.
ComplexVector risk_gradient(const LabeledDataset& data, const CoefficientExpansion& expansion);

struct NormSquared {
  double value;  // clamped at 0
  double raw;
};

/// alpha^* K alpha.
NormSquared rkhs_norm_sq(const CoefficientExpansion& expansion);

}  // namespace rkhs
