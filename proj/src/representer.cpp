#include "rkhs/representer.hpp"

#include <algorithm>
#include <cstdio>

namespace rkhs {

void require_distinct(std::span<const Complex> points, const char* what) {
  std::vector<std::pair<double, double>> keys;
  keys.reserve(points.size());
  for (const auto& z : points) keys.emplace_back(z.real(), z.imag());
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    fail(ErrorKind::input, std::string(what) + " are not pairwise distinct");
}

LabeledDataset::LabeledDataset(ComplexVector inputs, ComplexVector outputs, double lambda)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), lambda_(lambda) {
  if (inputs_.size() != outputs_.size())
    fail(ErrorKind::input, "dataset inputs and outputs differ in length");
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_)) fail(ErrorKind::input, "lambda must be positive");
  require_finite(inputs_, "input");
  require_finite(outputs_, "output");
  require_distinct(inputs_, "dataset inputs");
}

CoefficientExpansion::CoefficientExpansion(ComplexVector centers, ComplexVector coefficients,
                                           KernelSpec kernel)
    : centers_(std::move(centers)), coefficients_(std::move(coefficients)), kernel_(kernel) {
  if (centers_.size() != coefficients_.size())
    fail(ErrorKind::input, "centers and coefficients differ in length");
  kernel_.validate();
  require_finite(centers_, "center");
  require_finite(coefficients_, "coefficient");
  for (const auto& z : centers_)
    if (!kernel_.in_domain(z)) fail(ErrorKind::domain, "center outside the kernel domain");
}

FitResult fit(const LabeledDataset& data, const KernelSpec& kernel) {
  const HermitianMatrix k = gram_matrix(kernel, data.inputs());
  const LdlFactorization ldl(k, data.lambda());
  ComplexVector alpha = ldl.solve(data.outputs());
  FitResult r{CoefficientExpansion(data.inputs(), std::move(alpha), kernel), ldl.pivot_ratio(), {}};
  if (r.pivot_ratio > kConditionWarning) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "ill-conditioned system: pivot ratio %.3e", r.pivot_ratio);
    r.warnings.emplace_back(buf);
  }
  return r;
}

ComplexVector reverse_outputs(const CoefficientExpansion& target, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) fail(ErrorKind::input, "lambda must be positive");
  require_distinct(target.centers(), "centers");
  return gram_matrix(target.kernel(), target.centers()).multiply(target.coefficients(), lambda);
}

Complex evaluate(const CoefficientExpansion& expansion, Complex z) {
  require_finite(z, "z");
  Complex s = 0.0;
  for (std::size_t j = 0; j < expansion.size(); ++j)
    s += expansion.coefficients()[j] * kernel_eval(expansion.kernel(), z, expansion.centers()[j]);
  return s;
}

namespace {

void require_matching(const LabeledDataset& data, const CoefficientExpansion& e) {
  if (e.centers() != data.inputs())
    fail(ErrorKind::contract, "expansion centers must equal the dataset inputs");
}

}  // namespace

double empirical_risk(const LabeledDataset& data, const CoefficientExpansion& expansion) {
  require_matching(data, expansion);
  const HermitianMatrix k = gram_matrix(expansion.kernel(), expansion.centers());
  const ComplexVector ka = k.multiply(expansion.coefficients());
  double fit_term = 0.0;
  Complex reg = 0.0;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    fit_term += std::norm(data.outputs()[i] - ka[i]);
    reg += std::conj(expansion.coefficients()[i]) * ka[i];
  }
  return fit_term + data.lambda() * reg.real();
}

double empirical_risk_expanded(const LabeledDataset& data, const CoefficientExpansion& expansion) {
  require_matching(data, expansion);
  const auto& z = expansion.centers();
  const auto& a = expansion.coefficients();
  double fit_term = 0.0;
  Complex reg = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    Complex f = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) f += a[j] * kernel_eval(expansion.kernel(), z[k], z[j]);
    fit_term += std::norm(data.outputs()[k] - f);
    reg += std::conj(a[k]) * f;
  }
  return fit_term + data.lambda() * reg.real();
}

ComplexVector risk_gradient(const LabeledDataset& data, const CoefficientExpansion& expansion) {
  require_matching(data, expansion);
  const HermitianMatrix k = gram_matrix(expansion.kernel(), expansion.centers());
  // conj(K) (conj(K alpha) + lambda conj(alpha) - conj(w)) = conj(K (K alpha + lambda alpha - w))
  const ComplexVector r = k.multiply(expansion.coefficients(), data.lambda());
  ComplexVector d(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) d[i] = r[i] - data.outputs()[i];
  ComplexVector g = k.multiply(d);
  for (auto& v : g) v = std::conj(v);
  return g;
}

NormSquared rkhs_norm_sq(const CoefficientExpansion& expansion) {
  const double raw =
      gram_matrix(expansion.kernel(), expansion.centers()).quadratic_form(expansion.coefficients());
  return {std::max(raw, 0.0), raw};
}

}  // namespace rkhs
