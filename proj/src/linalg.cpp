#include "rkhs/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>

namespace rkhs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input: return "input";
    case ErrorKind::domain: return "domain";
    case ErrorKind::not_positive_definite: return "not_positive_definite";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::contract: return "contract";
    case ErrorKind::range: return "range";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

HermitianMatrix HermitianMatrix::from_upper(
    std::size_t dim, const std::function<Complex(std::size_t, std::size_t)>& upper) {
  std::vector<Complex> data(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Complex d = upper(i, i);
    data[i * dim + i] = Complex(d.real(), 0.0);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex v = upper(i, j);
      data[i * dim + j] = v;
      data[j * dim + i] = std::conj(v);
    }
  }
  return HermitianMatrix(dim, std::move(data));
}

HermitianMatrix HermitianMatrix::from_dense(std::size_t dim, std::vector<Complex> entries) {
  if (entries.size() != dim * dim) fail(ErrorKind::input, "HermitianMatrix: wrong entry count");
  for (std::size_t i = 0; i < dim; ++i) {
    if (entries[i * dim + i].imag() != 0.0)
      fail(ErrorKind::input, "HermitianMatrix: diagonal entry is not real");
    for (std::size_t j = i + 1; j < dim; ++j)
      if (entries[j * dim + i] != std::conj(entries[i * dim + j]))
        fail(ErrorKind::input, "HermitianMatrix: entries are not conjugate symmetric");
  }
  require_finite(entries, "HermitianMatrix entry");
  return HermitianMatrix(dim, std::move(entries));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  std::vector<Complex> data(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) data[i * dim + i] = 1.0;
  return HermitianMatrix(dim, std::move(data));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  const std::size_t dim = d.size();
  std::vector<Complex> data(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) data[i * dim + i] = d[i];
  return HermitianMatrix(dim, std::move(data));
}

ComplexVector HermitianMatrix::multiply(std::span<const Complex> x, double shift) const {
  if (x.size() != dim_) fail(ErrorKind::contract, "multiply: dimension mismatch");
  ComplexVector y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex s = shift * x[i];
    const Complex* r = data_.data() + i * dim_;
    for (std::size_t j = 0; j < dim_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

double HermitianMatrix::quadratic_form(std::span<const Complex> x) const {
  const ComplexVector ax = multiply(x);
  Complex s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += std::conj(x[i]) * ax[i];
  return s.real();
}

double HermitianMatrix::max_abs_diagonal() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) m = std::max(m, std::abs(data_[i * dim_ + i].real()));
  return m;
}

LdlFactorization::LdlFactorization(const HermitianMatrix& a, double shift)
    : n_(a.dim()), l_(n_ * n_), d_(n_) {
  if (!(shift >= 0.0) || !std::isfinite(shift))
    fail(ErrorKind::input, "shift must be finite and nonnegative");
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    max_diag = std::max(max_diag, std::abs(a(i, i).real() + shift));
  const double floor = kPivotTolerance * max_diag;

  std::vector<Complex> ld(n_);  // L(j, k) * D(k) for the current row
  for (std::size_t j = 0; j < n_; ++j) {
    Complex* lj = l_.data() + j * n_;
    double dj = a(j, j).real() + shift;
    for (std::size_t k = 0; k < j; ++k) {
      ld[k] = lj[k] * d_[k];
      dj -= (ld[k] * std::conj(lj[k])).real();
    }
    if (!(dj > floor)) throw NotPositiveDefiniteError(j, dj);
    d_[j] = dj;
    lj[j] = 1.0;
    for (std::size_t i = j + 1; i < n_; ++i) {
      const Complex* li = l_.data() + i * n_;
      Complex s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= li[k] * std::conj(ld[k]);
      l_[i * n_ + j] = s / dj;
    }
  }
}

ComplexVector LdlFactorization::solve(std::span<const Complex> b) const {
  if (b.size() != n_) fail(ErrorKind::contract, "solve: dimension mismatch");
  ComplexVector x(b.begin(), b.end());
  for (std::size_t i = 0; i < n_; ++i) {
    const Complex* li = l_.data() + i * n_;
    Complex s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= li[k] * x[k];
    x[i] = s;
  }
  for (std::size_t i = 0; i < n_; ++i) x[i] /= d_[i];
  for (std::size_t i = n_; i-- > 0;) {
    Complex s = x[i];
    for (std::size_t k = i + 1; k < n_; ++k) s -= std::conj(l_[k * n_ + i]) * x[k];
    x[i] = s;
  }
  return x;
}

double LdlFactorization::pivot_ratio() const {
  if (d_.empty()) return 1.0;
  const auto [lo, hi] = std::minmax_element(d_.begin(), d_.end());
  return *hi / *lo;
}

ComplexVector hermitian_solve(const HermitianMatrix& a, double shift, std::span<const Complex> b) {
  if (b.size() != a.dim()) fail(ErrorKind::contract, "hermitian_solve: dimension mismatch");
  require_finite(b, "right-hand side");
  return LdlFactorization(a, shift).solve(b);
}

EigenRange eigen_range(const HermitianMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  if (n == 0) return {0.0, 0.0};
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(ErrorKind::non_convergence, "eigenvalue solver failed");
  const auto& ev = es.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

namespace {

Complex quadratic_functional(const HermitianMatrix& a, std::span<const Complex> c,
                             std::span<const Complex> z) {
  const ComplexVector az = a.multiply(z);
  Complex s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += std::conj(c[i]) * z[i] + std::conj(z[i]) * az[i];
  return s;
}

void check_shapes(const HermitianMatrix& a, std::span<const Complex> c,
                  std::span<const Complex> z) {
  if (c.size() != a.dim() || z.size() != a.dim())
    fail(ErrorKind::contract, "wirtinger: dimension mismatch");
  require_finite(c, "c");
  require_finite(z, "z");
}

}  // namespace

ComplexVector wirtinger_gradient(const HermitianMatrix& a, std::span<const Complex> c,
                                 std::span<const Complex> z) {
  check_shapes(a, c, z);
  const std::size_t n = a.dim();
  ComplexVector g(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = std::conj(c[i]);
    for (std::size_t j = 0; j < n; ++j) s += a(j, i) * std::conj(z[j]);  // (A^T conj z)_i
    g[i] = s;
  }
  return g;
}

double wirtinger_gradient_check(const HermitianMatrix& a, std::span<const Complex> c,
                                std::span<const Complex> z0, double step) {
  if (!(step >= 1e-8 && step <= 1e-3)) fail(ErrorKind::input, "step must lie in [1e-8, 1e-3]");
  const ComplexVector g = wirtinger_gradient(a, c, z0);
  ComplexVector z(z0.begin(), z0.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Complex zi = z[i];
    z[i] = zi + step;
    const Complex fxp = quadratic_functional(a, c, z);
    z[i] = zi - step;
    const Complex fxm = quadratic_functional(a, c, z);
    z[i] = zi + kI * step;
    const Complex fyp = quadratic_functional(a, c, z);
    z[i] = zi - kI * step;
    const Complex fym = quadratic_functional(a, c, z);
    z[i] = zi;
    const Complex dx = (fxp - fxm) / (2.0 * step);
    const Complex dy = (fyp - fym) / (2.0 * step);
    worst = std::max(worst, std::abs(0.5 * (dx - kI * dy) - g[i]));
  }
  return worst;
}

}  // namespace rkhs
