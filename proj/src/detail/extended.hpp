#pragma once

// Kernel sums evaluated with 100 significant decimal digits. Classical
// coefficients reach magnitudes of 2^n while the sums they produce stay O(1),
// so binary64 accumulation loses every digit for n around 50 and above.

#include <span>

#include "rkhs/superosc.hpp"

namespace rkhs::detail {

/// generate(family, params, z) for each z.
ComplexVector extended_generate(const SuperFamily& family, const SuperoscParams& params,
                                std::span<const Complex> z);

/// (K + lambda I) alpha for the family's expansion at its own centers.
ComplexVector extended_outputs(const SuperFamily& family, const SuperoscParams& params,
                               double lambda);

/// Mittag-Leffler or Touchard outputs by moments instead of pairwise kernels:
/// w_k = sum_m c_m h_k^m mu_m + lambda Z_k with K(u) = sum_m c_m u^m and
/// mu_m = sum_j Z_j h_j^m.
ComplexVector extended_moment_outputs(const SuperFamily& family, const SuperoscParams& params,
                                      double lambda);

/// w_k = sum_j Z_j e^{h_j h_k} + lambda Z_k, entrywise.
ComplexVector extended_fock_formula(const SuperoscParams& params, double lambda);

/// w_k = e^{h_k^2/2} sum_j Z_j e^{h_j^2/2 + h_k h_j} + lambda Z_k, entrywise.
ComplexVector extended_rbf_second_formula(const SuperoscParams& params, double lambda);

}  // namespace rkhs::detail
