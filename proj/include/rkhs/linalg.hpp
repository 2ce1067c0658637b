#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rkhs/types.hpp"

namespace rkhs {

/// Dense Hermitian matrix stored in full, row-major. Every constructor
/// produces exact Hermitian storage: entry (j, i) is the bitwise conjugate
/// of entry (i, j) and the diagonal has a zero imaginary part.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Builds from the upper triangle: `upper(i, j)` is called for i <= j only.
  static HermitianMatrix from_upper(std::size_t dim,
                                    const std::function<Complex(std::size_t, std::size_t)>& upper);

  /// Wraps a full row-major grid, rejecting it unless it is exactly Hermitian.
  static HermitianMatrix from_dense(std::size_t dim, std::vector<Complex> entries);

  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  std::span<const Complex> entries() const noexcept { return data_; }

  /// y = (A + shift I) x
  ComplexVector multiply(std::span<const Complex> x, double shift = 0.0) const;

  /// x* A x (real part; the imaginary part vanishes up to round-off).
  double quadratic_form(std::span<const Complex> x) const;

  double max_abs_diagonal() const;

 private:
  HermitianMatrix(std::size_t dim, std::vector<Complex> data) : dim_(dim), data_(std::move(data)) {}

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// A + shift I = L D L*, L unit lower triangular, D real positive.
class LdlFactorization {
 public:
  /// Throws NotPositiveDefiniteError when a pivot falls to or below
  /// 1e-14 * max|diag(A + shift I)|.
  LdlFactorization(const HermitianMatrix& a, double shift = 0.0);

  ComplexVector solve(std::span<const Complex> b) const;

  std::span<const double> pivots() const noexcept { return d_; }

  /// max(D) / min(D); a cheap conditioning indicator.
  double pivot_ratio() const;

  static constexpr double kPivotTolerance = 1e-14;

 private:
  std::size_t n_;
  std::vector<Complex> l_;  // row-major, strictly lower part used
  std::vector<double> d_;
};

/// Solves (A + shift I) x = b.
ComplexVector hermitian_solve(const HermitianMatrix& a, double shift, std::span<const Complex> b);

struct EigenRange {
  double min;
  double max;
};

/// Smallest and largest eigenvalue of a Hermitian matrix.
EigenRange eigen_range(const HermitianMatrix& a);

/// Complex gradient of J(z) = c* z + z* A z, i.e. conj(c) + A^T conj(z).
ComplexVector wirtinger_gradient(const HermitianMatrix& a, std::span<const Complex> c,
                                 std::span<const Complex> z);

/// Max abs difference between wirtinger_gradient and the central-difference
/// Wirtinger derivative (d/dx - i d/dy) / 2 of J at z0. `step` in [1e-8, 1e-3].
double wirtinger_gradient_check(const HermitianMatrix& a, std::span<const Complex> c,
                                std::span<const Complex> z0, double step);

}  // namespace rkhs
