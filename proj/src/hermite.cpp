#include "rkhs/hermite.hpp"

#include <numbers>

namespace rkhs {

namespace {

void check_order(int k, int max_order) {
  if (k < 0) fail(ErrorKind::input, "Hermite order must be nonnegative");
  if (k > max_order)
    fail(ErrorKind::range, "Hermite order " + std::to_string(k) + " exceeds " + std::to_string(max_order));
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

Complex ipow(Complex base, int e) {
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Complex hermite_poly(int k, Complex z) {
  check_order(k, kMaxHermiteOrder);
  require_finite(z, "z");
  Complex prev = 1.0;
  if (k == 0) return prev;
  Complex cur = 2.0 * z;
  for (int m = 1; m < k; ++m) {
    const Complex next = 2.0 * z * cur - 2.0 * m * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex hermite_function(int k, Complex x) { return std::exp(-x * x / 2.0) * hermite_poly(k, x); }

Complex hermite_addition(int k, Complex z, Complex w) {
  check_order(k, kMaxHermiteOrder);
  Complex s = 0.0;
  for (int l = 0; l <= k; ++l) s += binomial(k, l) * hermite_poly(l, z) * ipow(2.0 * w, k - l);
  return s;
}

Complex hermite_addition_printed(int k, Complex z, Complex w) {
  check_order(k, kMaxHermiteOrder);
  const Complex hk = hermite_poly(k, z);
  Complex s = 0.0;
  for (int l = 0; l <= k; ++l) s += binomial(k, l) * hk * ipow(2.0 * w, k - l);
  return s;
}

Complex hermite_scaling(int k, Complex gamma, Complex z) {
  check_order(k, kMaxHermiteOrder);
  if (gamma == 0.0) fail(ErrorKind::input, "gamma must be nonzero");
  const Complex ratio = (gamma * gamma - 1.0) / (gamma * gamma);
  Complex s = 0.0;
  double fact_ratio = 1.0;  // (2l)! / l!
  for (int l = 0; 2 * l <= k; ++l) {
    if (l > 0) fact_ratio *= 2.0 * (2 * l - 1);
    s += ipow(ratio, l) * binomial(k, 2 * l) * fact_ratio * hermite_poly(k - 2 * l, z);
  }
  return ipow(gamma, k) * s;
}

Complex gaussian_moment_integral(Complex a, Complex b, int n) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (!(a.real() > 0.0)) fail(ErrorKind::domain, "gaussian_moment_integral needs Re(a) > 0");
  check_order(n, 20);
  const Complex sa = std::sqrt(a);
  return std::sqrt(std::numbers::pi / a) * std::exp(b * b / (4.0 * a)) * ipow(-kI, n) *
         ipow(1.0 / (2.0 * sa), n) * hermite_poly(n, kI * b / (2.0 * sa));
}

Complex gaussian_hermite_integral(Complex a, Complex b, double c, int k) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (!std::isfinite(c)) fail(ErrorKind::input, "c is not finite");
  if (!(a.real() > 0.0)) fail(ErrorKind::domain, "gaussian_hermite_integral needs Re(a) > 0");
  if (a == 1.0) fail(ErrorKind::domain, "gaussian_hermite_integral is undefined at a = 1");
  check_order(k, 20);
  const Complex sa = std::sqrt(a);
  const Complex s1a = std::sqrt(1.0 - a);
  const Complex arg = (2.0 * kI * a * c - kI * b) / (2.0 * sa * s1a);
  return ipow(kI, k) * std::sqrt(std::numbers::pi / a) * std::exp(b * b / (4.0 * a)) *
         ipow(s1a / sa, k) * hermite_poly(k, arg);
}

}  // namespace rkhs
