#pragma once

#include "rkhs/types.hpp"

namespace rkhs {

inline constexpr int kMaxHermiteOrder = 30;

/// Physicists' Hermite polynomial H_k(z) by the three-term recurrence.
/// k > 30 is a range error.
Complex hermite_poly(int k, Complex z);

/// Hermite function e^{-x^2/2} H_k(x).
Complex hermite_function(int k, Complex x);

/// sum_l binom(k, l) H_l(z) (2w)^{k-l}, which equals H_k(z + w).
Complex hermite_addition(int k, Complex z, Complex w);
/// The same sum with H_k(z) in place of H_l(z), as it appears in print.
Complex hermite_addition_printed(int k, Complex z, Complex w);

/// gamma^k sum_l ((gamma^2 - 1)/gamma^2)^l binom(k, 2l) (2l)!/l! H_{k-2l}(z),
/// which equals H_k(gamma z).
Complex hermite_scaling(int k, Complex gamma, Complex z);

/// int_R x^n e^{-a x^2 + b x} dx
///   = sqrt(pi/a) e^{b^2/4a} (-i)^n (2 sqrt(a))^{-n} H_n(i b / (2 sqrt(a))).
/// Re(a) > 0, n <= 20, principal square roots.
Complex gaussian_moment_integral(Complex a, Complex b, int n);

/// int_R e^{-a x^2 + b x} H_k(x - c) dx
///   = i^k sqrt(pi/a) e^{b^2/4a} ((1-a)/a)^{k/2} H_k((2iac - ib) / (2 sqrt(a) sqrt(1-a))).
/// Re(a) > 0, a != 1, k <= 20; ((1-a)/a)^{k/2} is taken as (sqrt(1-a)/sqrt(a))^k.
Complex gaussian_hermite_integral(Complex a, Complex b, double c, int k);

}  // namespace rkhs
