#include "rkhs/closed_forms.hpp"

#include <cmath>

#include "detail/extended.hpp"

namespace rkhs {

namespace {

void check_classical_args(int n, double a, double lambda, bool strict_a) {
  if (n < 1) fail(ErrorKind::input, "n must be at least 1");
  if (!std::isfinite(a) || a < 1.0 || (strict_a && a == 1.0))
    fail(ErrorKind::input, strict_a ? "a must exceed 1" : "a must be at least 1");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) fail(ErrorKind::input, "lambda must be nonnegative");
}

double binomial(int n, int k) {
  if (n <= 60) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
  }
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// base^n * x, going through logarithms when the direct product leaves the
// binary64 range. base > 0.
Complex scaled_power(double base, int n, Complex x) {
  const Complex direct = std::pow(base, n) * x;
  if (is_finite(direct) && (direct != 0.0 || x == 0.0)) return direct;
  return std::exp(n * std::log(base) + std::log(x));
}

// Pairwise kernel sum at the centers, binary64.
template <class K>
ComplexVector kernel_sum_outputs(const SuperoscParams& params, double lambda, K kernel) {
  params.validate();
  const auto& h = params.frequencies;
  const auto& z = params.coefficients;
  ComplexVector w(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) s += z[j] * kernel(h[k], h[j]);
    w[k] = s + lambda * z[k];
  }
  return w;
}

}  // namespace

ComplexVector fock_outputs_general(const SuperoscParams& params, double lambda,
                                   Precision precision) {
  if (precision == Precision::extended) return detail::extended_fock_formula(params, lambda);
  return kernel_sum_outputs(params, lambda, [](double hk, double hj) { return std::exp(hj * hk); });
}

ComplexVector fock_outputs_classical(int n, double a, double lambda) {
  check_classical_args(n, a, lambda, false);
  const double b1 = (1.0 + a) / 2.0;
  const double r = (1.0 - a) / (1.0 + a);
  ComplexVector w(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double inner =
        std::exp(1.0 - 2.0 * k / n) *
            std::pow(1.0 + r * std::exp(-2.0 / n + 4.0 * k / (double(n) * n)), n) +
        lambda * binomial(n, k) * std::pow(r, k);
    w[k] = scaled_power(b1, n, inner);
  }
  return w;
}

ComplexVector rbf_outputs_first_printed(const SuperoscParams& params, double lambda) {
  params.validate();
  const auto& h = params.frequencies;
  ComplexVector w(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) s += params.coefficients[j] * std::exp(-h[k] * h[j]);
    w[k] = std::exp(h[k] * h[k] / 2.0) * s +
           lambda * params.coefficients[k] * std::exp(-h[k] * h[k] / 2.0);
  }
  return w;
}

ComplexVector rbf_outputs_second_printed(const SuperoscParams& params, double lambda) {
  params.validate();
  const auto& h = params.frequencies;
  ComplexVector w(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j)
      s += params.coefficients[j] * std::exp(h[j] * h[j] / 2.0 - h[k] * h[j]);
    w[k] = std::exp(h[k] * h[k] / 2.0) * s + lambda * params.coefficients[k];
  }
  return w;
}

ComplexVector rbf_outputs_first_resolved(const SuperoscParams& params, double lambda,
                                         Precision precision) {
  params.validate();
  const auto& h = params.frequencies;
  const ComplexVector fock = fock_outputs_general(params, 0.0, precision);
  ComplexVector w(h.size());
  for (std::size_t k = 0; k < h.size(); ++k)
    w[k] = std::exp(h[k] * h[k] / 2.0) * fock[k] +
           lambda * params.coefficients[k] * std::exp(-h[k] * h[k] / 2.0);
  return w;
}

ComplexVector rbf_outputs_second_resolved(const SuperoscParams& params, double lambda,
                                          Precision precision) {
  if (precision == Precision::extended) return detail::extended_rbf_second_formula(params, lambda);
  params.validate();
  const auto& h = params.frequencies;
  ComplexVector w(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j)
      s += params.coefficients[j] * std::exp(h[j] * h[j] / 2.0 + h[k] * h[j]);
    w[k] = std::exp(h[k] * h[k] / 2.0) * s + lambda * params.coefficients[k];
  }
  return w;
}

ComplexVector rbf_outputs_classical_first_printed(int n, double a, double lambda) {
  check_classical_args(n, a, lambda, true);
  const double b1 = (1.0 + a) / 2.0;
  const double r = (1.0 - a) / (1.0 + a);
  const double rinv = (1.0 + a) / (1.0 - a);
  const double nn = n;
  ComplexVector w(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double kk = k;
    const double first = std::exp(-0.5 + 2.0 * kk * kk / nn) *
                         std::pow(1.0 + rinv * std::exp(2.0 / nn * (1.0 - 2.0 * kk / nn)), n);
    const double second = lambda * binomial(n, k) * std::pow(r, k) *
                          std::exp(-2.0 * kk * kk / (nn * nn) + 2.0 * kk / nn - 0.5);
    w[k] = scaled_power(b1, n, first + second);
  }
  return w;
}

ComplexVector rbf_outputs_classical_second_printed(int n, double a, double lambda) {
  check_classical_args(n, a, lambda, true);
  const double b1 = (1.0 + a) / 2.0;
  const double r = (1.0 - a) / (1.0 + a);
  const double rinv = (1.0 + a) / (1.0 - a);
  const double nn = n;
  ComplexVector w(n + 1);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j)
      s += binomial(n, j) * std::pow(r, j) * std::exp(2.0 * j * (j - 2.0 * k / nn) / (nn * nn));
    const double inner =
        lambda * binomial(n, k) * std::pow(rinv, k) + std::exp(2.0 * k * k / (nn * nn)) * s;
    w[k] = scaled_power(b1, n, inner);
  }
  return w;
}

ComplexVector rbf_outputs_classical_first_resolved(int n, double a, double lambda) {
  check_classical_args(n, a, lambda, false);
  const double b1 = (1.0 + a) / 2.0;
  const double r = (1.0 - a) / (1.0 + a);
  ComplexVector w(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double h = 1.0 - 2.0 * k / n;
    const double x = r * std::exp(-2.0 * h / n);
    const double inner = std::exp(h * h / 2.0 + h) * std::pow(1.0 + x, n) +
                         lambda * binomial(n, k) * std::pow(r, k) * std::exp(-h * h / 2.0);
    w[k] = scaled_power(b1, n, inner);
  }
  return w;
}

ComplexVector rbf_outputs_classical_second_resolved(int n, double a, double lambda) {
  check_classical_args(n, a, lambda, false);
  return rbf_outputs_second_resolved(classical_params(n, a), lambda, Precision::extended);
}

ComplexVector ml_outputs(const SuperoscParams& params, double q, double lambda,
                         Precision precision) {
  if (precision == Precision::extended)
    return detail::extended_moment_outputs(SuperFamily::mittag_leffler(q), params, lambda);
  return kernel_sum_outputs(params, lambda, [q](double hk, double hj) {
    return mittag_leffler_kernel(Complex(0.0, -hk), Complex(0.0, -hj), q);
  });
}

ComplexVector touchard_outputs(const SuperoscParams& params, int p, double lambda,
                               Precision precision) {
  if (precision == Precision::extended)
    return detail::extended_moment_outputs(SuperFamily::touchard(p), params, lambda);
  return kernel_sum_outputs(params, lambda, [p](double hk, double hj) {
    return touchard_kernel(Complex(0.0, -hk), Complex(0.0, -hj), p);
  });
}

namespace {

ComplexVector touchard_p1(int n, double a, double lambda, bool printed) {
  check_classical_args(n, a, lambda, true);
  const double b1 = (1.0 + a) / 2.0;
  const double r = (1.0 - a) / (1.0 + a);
  ComplexVector w(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double z = 1.0 - 2.0 * k / n;
    const double x = r * std::exp(-2.0 * z / n);
    const double quad = printed ? (1.0 - x) + 4.0 / n * x : (1.0 - x) * (1.0 - x) + 4.0 / n * x;
    const double brace = (1.0 + x) * (1.0 + x) + 3.0 * z * (1.0 - r * r * std::exp(-4.0 * z / n)) +
                         z * z * quad;
    const double inner =
        lambda * binomial(n, k) * std::pow(r, k) + std::exp(z) * std::pow(1.0 + x, n - 2) * brace;
    w[k] = scaled_power(b1, n, inner);
  }
  return w;
}

}  // namespace

ComplexVector touchard_outputs_p1_closed_printed(int n, double a, double lambda) {
  return touchard_p1(n, a, lambda, true);
}

ComplexVector touchard_outputs_p1_closed_resolved(int n, double a, double lambda) {
  return touchard_p1(n, a, lambda, false);
}

Complex binomial_moment1(int n, Complex x) {
  if (n < 1) fail(ErrorKind::input, "n must be at least 1");
  return static_cast<double>(n) * x * std::pow(1.0 + x, n - 1);
}

Complex binomial_moment2(int n, Complex x) {
  if (n < 1) fail(ErrorKind::input, "n must be at least 1");
  const double nn = n;
  return nn * x * std::pow(1.0 + x, n - 2) * (1.0 + nn * x);
}

ComplexVector oracle_outputs(const SuperFamily& family, const SuperoscParams& params,
                             double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) fail(ErrorKind::input, "lambda must be nonnegative");
  return detail::extended_outputs(family, params, lambda);
}

OutputFormulaReport compare_outputs(std::string family, int n, double a, double lambda,
                                    ComplexVector w_formula, ComplexVector w_oracle,
                                    double tolerance) {
  OutputFormulaReport r;
  r.family = std::move(family);
  r.n = n;
  r.a = a;
  r.lambda = lambda;
  r.tolerance = tolerance;
  r.max_rel_err = max_rel_err(w_formula, w_oracle);
  r.match = r.max_rel_err <= tolerance;
  r.w_formula = std::move(w_formula);
  r.w_oracle = std::move(w_oracle);
  return r;
}

void attach_resolved(OutputFormulaReport& report, ComplexVector w_resolved) {
  FormulaComparison c;
  c.max_rel_err = max_rel_err(w_resolved, report.w_oracle);
  c.match = c.max_rel_err <= report.tolerance;
  c.w_formula = std::move(w_resolved);
  report.resolved = std::move(c);
}

}  // namespace rkhs
