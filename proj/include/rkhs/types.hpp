#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rkhs/error.hpp"

namespace rkhs {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Arithmetic used for cancellation-prone sums. `extended` evaluates in
/// 100 significant decimal digits and rounds the result to binary64.
enum class Precision { binary64, extended };

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) fail(ErrorKind::input, std::string(what) + " is not finite");
}

inline void require_finite(std::span<const Complex> v, const char* what) {
  for (const auto& z : v) require_finite(z, what);
}

/// Euclidean norm of a complex vector.
inline double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

/// max_k |a_k - b_k| / max(1, |b_k|); `b` is the reference.
inline double max_rel_err(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) fail(ErrorKind::contract, "max_rel_err: length mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double e = std::abs(a[k] - b[k]) / std::max(1.0, std::abs(b[k]));
    if (std::isnan(e)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, e);
  }
  return worst;
}

/// ||a - b|| / ||b||.
inline double rel_l2_err(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) fail(ErrorKind::contract, "rel_l2_err: length mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num += std::norm(a[k] - b[k]);
    den += std::norm(b[k]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace rkhs
