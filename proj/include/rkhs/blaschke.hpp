#pragma once

#include <random>

#include "rkhs/types.hpp"

namespace rkhs {

/// B(z) = prod_j (z - a_j) / (1 - conj(a_j) z) with simple, nonzero roots
/// inside the open unit disk.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(ComplexVector roots);

  const ComplexVector& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }

 private:
  ComplexVector roots_;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex z);

/// B'(a_j) = (1 / (1 - |a_j|^2)) prod_{k != j} (a_j - a_k) / (1 - conj(a_k) a_j).
Complex blaschke_derivative_at_root(const BlaschkeProduct& b, std::size_t j);

/// B(z) = c0 + sum_j c_j / (1 - z conj(a_j)) with c0 = 1 / conj(B(0)) and
/// c_j = 1 / (conj(a_j) conj(B'(a_j))).
struct BlaschkeCoefficients {
  Complex c0;
  ComplexVector c;
};
BlaschkeCoefficients blaschke_coefficients(const BlaschkeProduct& b);

/// Right-hand side of the kernel expansion, c0 + sum_j c_j / (1 - z conj(a_j)).
Complex blaschke_kernel_sum(const BlaschkeProduct& b, const BlaschkeCoefficients& coeffs, Complex z);

/// w_k = B(a_k) + lambda / (conj(a_k) conj(B'(a_k))) - 1 / conj(B(0)), lambda >= 0.
ComplexVector blaschke_outputs(const BlaschkeProduct& b, double lambda);

/// (K + lambda I) c with K the Szego Gram matrix of the roots.
ComplexVector blaschke_oracle_outputs(const BlaschkeProduct& b, double lambda);

/// `count` roots with moduli in [rmin, rmax] and pairwise distance at least
/// `min_separation`.
BlaschkeProduct random_blaschke(std::mt19937_64& rng, std::size_t count, double rmin = 0.1,
                                double rmax = 0.9, double min_separation = 0.15);

}  // namespace rkhs
