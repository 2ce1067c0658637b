#include "rkhs/blaschke.hpp"

#include <numbers>

#include "rkhs/gram.hpp"
#include "rkhs/representer.hpp"

namespace rkhs {

BlaschkeProduct::BlaschkeProduct(ComplexVector roots) : roots_(std::move(roots)) {
  require_finite(roots_, "root");
  for (const auto& a : roots_) {
    if (!(std::abs(a) < 1.0)) fail(ErrorKind::domain, "Blaschke roots must lie in the open unit disk");
    if (a == 0.0) fail(ErrorKind::domain, "Blaschke roots must be nonzero");
  }
  require_distinct(roots_, "Blaschke roots");
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
  require_finite(z, "z");
  Complex v = 1.0;
  for (const auto& a : b.roots()) {
    const Complex den = 1.0 - std::conj(a) * z;
    if (den == 0.0) fail(ErrorKind::domain, "z is a pole of the Blaschke product");
    v *= (z - a) / den;
  }
  return v;
}

Complex blaschke_derivative_at_root(const BlaschkeProduct& b, std::size_t j) {
  const auto& r = b.roots();
  if (j >= r.size()) fail(ErrorKind::input, "root index out of range");
  const Complex aj = r[j];
  Complex v = 1.0 / (1.0 - std::norm(aj));
  for (std::size_t k = 0; k < r.size(); ++k)
    if (k != j) v *= (aj - r[k]) / (1.0 - std::conj(r[k]) * aj);
  return v;
}

BlaschkeCoefficients blaschke_coefficients(const BlaschkeProduct& b) {
  BlaschkeCoefficients out;
  out.c0 = 1.0 / std::conj(blaschke_eval(b, 0.0));
  out.c.resize(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    out.c[j] = 1.0 / (std::conj(b.roots()[j]) * std::conj(blaschke_derivative_at_root(b, j)));
  return out;
}

Complex blaschke_kernel_sum(const BlaschkeProduct& b, const BlaschkeCoefficients& coeffs, Complex z) {
  if (coeffs.c.size() != b.size()) fail(ErrorKind::contract, "coefficient count mismatch");
  Complex s = coeffs.c0;
  for (std::size_t j = 0; j < b.size(); ++j) s += coeffs.c[j] * szego_kernel(z, b.roots()[j]);
  return s;
}

ComplexVector blaschke_outputs(const BlaschkeProduct& b, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) fail(ErrorKind::input, "lambda must be nonnegative");
  const Complex c0 = 1.0 / std::conj(blaschke_eval(b, 0.0));
  ComplexVector w(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    const Complex ak = b.roots()[k];
    w[k] = blaschke_eval(b, ak) +
           lambda / (std::conj(ak) * std::conj(blaschke_derivative_at_root(b, k))) - c0;
  }
  return w;
}

ComplexVector blaschke_oracle_outputs(const BlaschkeProduct& b, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) fail(ErrorKind::input, "lambda must be nonnegative");
  const BlaschkeCoefficients c = blaschke_coefficients(b);
  return gram_matrix(KernelSpec::szego(), b.roots()).multiply(c.c, lambda);
}

BlaschkeProduct random_blaschke(std::mt19937_64& rng, std::size_t count, double rmin, double rmax,
                                double min_separation) {
  if (!(0.0 < rmin && rmin <= rmax && rmax < 1.0))
    fail(ErrorKind::input, "root moduli must satisfy 0 < rmin <= rmax < 1");
  std::uniform_real_distribution<double> radius(rmin, rmax);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ComplexVector roots;
  for (int attempt = 0; roots.size() < count; ++attempt) {
    if (attempt > 100000) fail(ErrorKind::input, "cannot place roots with the requested separation");
    const Complex a = std::polar(radius(rng), angle(rng));
    bool ok = true;
    for (const auto& r : roots) ok = ok && std::abs(a - r) >= min_separation;
    if (ok) roots.push_back(a);
  }
  return BlaschkeProduct(std::move(roots));
}

}  // namespace rkhs
