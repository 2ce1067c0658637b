#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rkhs/superosc.hpp"

namespace rkhs {

/// x_j = x_min + j (x_max - x_min) / points, j < points. The right end is
/// excluded so the grid tiles one period of length x_max - x_min.
struct Grid {
  double x_min = -16.0;
  double x_max = 16.0;
  std::size_t points = 2048;

  double dx() const { return (x_max - x_min) / static_cast<double>(points); }
  double x(std::size_t j) const { return x_min + static_cast<double>(j) * dx(); }
  double length() const { return x_max - x_min; }

  /// points must be a power of two, at least 64; x_min < x_max.
  void validate() const;
};

/// Samples of a wavefunction on a uniform grid at time t.
class EvolutionField {
 public:
  EvolutionField(Grid grid, double t, ComplexVector values);

  const Grid& grid() const noexcept { return grid_; }
  double t() const noexcept { return t_; }
  const ComplexVector& values() const noexcept { return values_; }

  /// sqrt(dx sum |psi_j|^2)
  double l2_norm() const;

 private:
  Grid grid_;
  double t_;
  ComplexVector values_;
};

EvolutionField sample_field(const Grid& grid, double t, const std::function<Complex(double)>& f);

/// Free evolution of e^{-x^2/2} f_n(x):
///   e^{-x^2/(2s)} / sqrt(s) sum_j Z_j e^{-h_j^2/2 + h_j^2/(2s) + i x h_j / s},  s = 1 + 2it.
Complex psi_free(double x, double t, const SuperoscParams& params);

/// Free evolution of e^{-x^2/2} H_k(x) f_n(x) by the Gaussian-Hermite
/// integral: ((-i)^k / sqrt(2 pi)) sum_j Z_j e^{-h_j^2/2} I(1/2 + it, h_j + ix, h_j, k).
Complex phi_free(double x, double t, int k, const SuperoscParams& params);

/// The closed form with prefactor (1 - 2it)^k / (5^{k/2} sqrt(1 + 2it)) and
/// H_k((x - 2 h_j t) / sqrt(1 + 4t^2)), as it appears in print.
Complex phi_free_printed(double x, double t, int k, const SuperoscParams& params);

/// e^{-x^2/2} H_k(x) f_n(x) with f_n(x) = sum_j Z_j e^{i h_j x}.
Complex initial_datum(double x, int k, const SuperoscParams& params);

/// Solves i psi_t = -psi_xx on the periodic grid: FFT, multiply by
/// e^{-i lambda^2 t}, inverse FFT. The result is at time initial.t() + t.
/// Throws PreconditionError if the edge samples exceed 1e-12 max(1, max|psi|).
EvolutionField fourier_propagate(const EvolutionField& initial, double t);

inline constexpr double kEdgeDecay = 1e-12;

/// Riemann-sum Fourier transform F(lambda_m) = dx sum_j e^{-i lambda_m x_j} psi_j
/// at lambda_m = 2 pi m / L, m in [-N/2, N/2).
std::vector<std::pair<double, Complex>> fourier_samples(const EvolutionField& field);

/// |i D_t psi + D_xx psi| with central differences; hx, ht in [1e-6, 1e-2].
double pde_residual(const std::function<Complex(double, double)>& psi, double x, double t,
                    double hx, double ht);

}  // namespace rkhs
