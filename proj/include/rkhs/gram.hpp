#pragma once

#include <span>

#include "rkhs/kernels.hpp"
#include "rkhs/linalg.hpp"

namespace rkhs {

/// K(k, j) = kernel(points[k], points[j]). Only the upper triangle is
/// evaluated; the lower one is its exact conjugate mirror.
HermitianMatrix gram_matrix(const KernelSpec& kernel, std::span<const Complex> points);

/// Minimum and maximum eigenvalue of the Gram matrix, plus whether
/// min >= -tol * max.
struct PsdCheck {
  EigenRange range;
  bool positive_semidefinite;
};
PsdCheck check_psd(const HermitianMatrix& gram, double tol = 1e-10);

}  // namespace rkhs
