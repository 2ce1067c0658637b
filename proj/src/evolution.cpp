#include "rkhs/evolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <numbers>

#include "rkhs/hermite.hpp"

namespace rkhs {

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex mu;
  return mu;
}

// In-place DFT with sign -1 (forward) or +1 (backward, unnormalized).
void dft(ComplexVector& v, int sign) {
  auto* data = reinterpret_cast<fftw_complex*>(v.data());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(v.size()), data, data, sign, FFTW_ESTIMATE);
  }
  if (!plan) fail(ErrorKind::input, "FFTW could not create a plan");
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

double angular_frequency(const Grid& g, std::size_t m) {
  const auto n = static_cast<long long>(g.points);
  long long signed_index = static_cast<long long>(m);
  if (signed_index >= n / 2) signed_index -= n;
  return 2.0 * std::numbers::pi * static_cast<double>(signed_index) / g.length();
}

}  // namespace

void Grid::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
    fail(ErrorKind::input, "grid needs finite x_min < x_max");
  if (points < 64 || (points & (points - 1)) != 0)
    fail(ErrorKind::input, "grid size must be a power of two, at least 64");
}

EvolutionField::EvolutionField(Grid grid, double t, ComplexVector values)
    : grid_(grid), t_(t), values_(std::move(values)) {
  grid_.validate();
  if (!std::isfinite(t_)) fail(ErrorKind::input, "t is not finite");
  if (values_.size() != grid_.points) fail(ErrorKind::input, "field size does not match the grid");
  require_finite(values_, "field value");
}

double EvolutionField::l2_norm() const { return norm2(values_) * std::sqrt(grid_.dx()); }

EvolutionField sample_field(const Grid& grid, double t, const std::function<Complex(double)>& f) {
  grid.validate();
  ComplexVector v(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) v[j] = f(grid.x(j));
  return EvolutionField(grid, t, std::move(v));
}

Complex psi_free(double x, double t, const SuperoscParams& params) {
  params.validate();
  const Complex s = 1.0 + 2.0 * kI * t;
  Complex sum = 0.0;
  for (std::size_t j = 0; j < params.frequencies.size(); ++j) {
    const double h = params.frequencies[j];
    sum += params.coefficients[j] * std::exp(-h * h / 2.0 + h * h / (2.0 * s) + kI * x * h / s);
  }
  return std::exp(-x * x / (2.0 * s)) / std::sqrt(s) * sum;
}

Complex phi_free(double x, double t, int k, const SuperoscParams& params) {
  params.validate();
  const Complex a = 0.5 + kI * t;
  Complex sum = 0.0;
  for (std::size_t j = 0; j < params.frequencies.size(); ++j) {
    const double h = params.frequencies[j];
    sum += params.coefficients[j] * std::exp(-h * h / 2.0) *
           gaussian_hermite_integral(a, h + kI * x, h, k);
  }
  return std::pow(-kI, k) / std::sqrt(2.0 * std::numbers::pi) * sum;
}

Complex phi_free_printed(double x, double t, int k, const SuperoscParams& params) {
  params.validate();
  const Complex s = 1.0 + 2.0 * kI * t;
  const double spread = std::sqrt(1.0 + 4.0 * t * t);
  Complex sum = 0.0;
  for (std::size_t j = 0; j < params.frequencies.size(); ++j) {
    const double h = params.frequencies[j];
    sum += params.coefficients[j] * std::exp(-h * h / 2.0 + h * h / (2.0 * s) + kI * x * h / s) *
           hermite_poly(k, (x - 2.0 * h * t) / spread);
  }
  const Complex pre = std::pow(1.0 - 2.0 * kI * t, k) / (std::pow(5.0, k / 2.0) * std::sqrt(s));
  return pre * std::exp(-x * x / (2.0 * s)) * sum;
}

Complex initial_datum(double x, int k, const SuperoscParams& params) {
  Complex f = 0.0;
  for (std::size_t j = 0; j < params.frequencies.size(); ++j)
    f += params.coefficients[j] * std::exp(kI * params.frequencies[j] * x);
  return hermite_function(k, x) * f;
}

EvolutionField fourier_propagate(const EvolutionField& initial, double t) {
  if (!std::isfinite(t)) fail(ErrorKind::input, "t is not finite");
  const auto& v = initial.values();
  double peak = 0.0;
  for (const auto& z : v) peak = std::max(peak, std::abs(z));
  const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
  if (edge > kEdgeDecay * std::max(1.0, peak))
    throw PreconditionError("field does not decay at the grid edges", edge);

  const Grid& g = initial.grid();
  ComplexVector w = v;
  dft(w, FFTW_FORWARD);
  for (std::size_t m = 0; m < w.size(); ++m) {
    const double lam = angular_frequency(g, m);
    w[m] *= std::polar(1.0, -lam * lam * t);
  }
  dft(w, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(w.size());
  for (auto& z : w) z *= scale;
  return EvolutionField(g, initial.t() + t, std::move(w));
}

std::vector<std::pair<double, Complex>> fourier_samples(const EvolutionField& field) {
  const Grid& g = field.grid();
  ComplexVector w = field.values();
  dft(w, FFTW_FORWARD);
  const std::size_t n = w.size();
  std::vector<std::pair<double, Complex>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = (i + n / 2) % n;  // ascending frequency order
    const double lam = angular_frequency(g, m);
    out.emplace_back(lam, g.dx() * std::polar(1.0, -lam * g.x_min) * w[m]);
  }
  return out;
}

double pde_residual(const std::function<Complex(double, double)>& psi, double x, double t,
                    double hx, double ht) {
  if (!(hx >= 1e-6 && hx <= 1e-2) || !(ht >= 1e-6 && ht <= 1e-2))
    fail(ErrorKind::input, "finite-difference steps must lie in [1e-6, 1e-2]");
  const Complex c = psi(x, t);
  const Complex dt = (psi(x, t + ht) - psi(x, t - ht)) / (2.0 * ht);
  const Complex dxx = (psi(x + hx, t) - 2.0 * c + psi(x - hx, t)) / (hx * hx);
  return std::abs(kI * dt + dxx);
}

}  // namespace rkhs
