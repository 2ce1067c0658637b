#include "rkhs/superosc.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "detail/extended.hpp"

namespace rkhs {

namespace {

constexpr int kExactBinomialLimit = 60;

std::uint64_t binomial_u64(int n, int k) {
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  return r;
}

// C_j via log |C_j| and a tracked sign, for n beyond the exact-integer range.
double log_space_coefficient(int n, int j, long double b1, long double b2) {
  const long double lbinom =
      std::lgamma(n + 1.0L) - std::lgamma(j + 1.0L) - std::lgamma(n - j + 1.0L);
  long double logmag = lbinom;
  int sign = 1;
  if (n - j > 0) {
    if (b1 == 0.0L) return 0.0;
    logmag += (n - j) * std::log(std::fabs(b1));
    if (b1 < 0 && (n - j) % 2) sign = -sign;
  }
  if (j > 0) {
    if (b2 == 0.0L) return 0.0;
    logmag += j * std::log(std::fabs(b2));
    if (b2 < 0 && j % 2) sign = -sign;
  }
  return static_cast<double>(sign * std::exp(logmag));
}

}  // namespace

SuperoscParams SuperoscParams::custom(double a, std::vector<double> h, ComplexVector z) {
  SuperoscParams p;
  p.n = static_cast<int>(h.size()) - 1;
  p.a = a;
  p.frequencies = std::move(h);
  p.coefficients = std::move(z);
  p.validate();
  return p;
}

ComplexVector SuperoscParams::centers() const {
  ComplexVector c(frequencies.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = Complex(0.0, -frequencies[j]);
  return c;
}

void SuperoscParams::validate() const {
  if (n < 0) fail(ErrorKind::input, "n must be nonnegative");
  if (frequencies.size() != static_cast<std::size_t>(n) + 1 || coefficients.size() != frequencies.size())
    fail(ErrorKind::input, "superoscillation parameters need n + 1 frequencies and coefficients");
  if (!std::isfinite(a)) fail(ErrorKind::input, "a must be finite");
  for (double h : frequencies)
    if (!std::isfinite(h) || std::abs(h) > 1.0) fail(ErrorKind::input, "frequencies must satisfy |h_j| <= 1");
  require_finite(coefficients, "coefficient");
}

SuperoscParams classical_params(int n, double a) {
  if (n < 1) fail(ErrorKind::input, "n must be at least 1");
  if (!std::isfinite(a)) fail(ErrorKind::input, "a must be finite");
  SuperoscParams p;
  p.n = n;
  p.a = a;
  p.classical = true;
  p.frequencies.resize(n + 1);
  p.coefficients.resize(n + 1);
  const double b1 = (1.0 + a) / 2.0;
  const double b2 = (1.0 - a) / 2.0;
  for (int j = 0; j <= n; ++j) {
    p.frequencies[j] = 1.0 - 2.0 * j / n;
    double c;
    if (b2 == 0.0) {
      c = j == 0 ? std::pow(b1, n) : 0.0;
    } else if (n <= kExactBinomialLimit) {
      c = static_cast<double>(binomial_u64(n, j)) * std::pow(b1, n - j) * std::pow(b2, j);
    } else {
      c = log_space_coefficient(n, j, b1, b2);
    }
    p.coefficients[j] = c;
  }
  return p;
}

Complex classical_product_form(Complex x, int n, double a) {
  if (n < 1) fail(ErrorKind::input, "n must be at least 1");
  require_finite(x, "x");
  const Complex t = x / static_cast<double>(n);
  Complex base = std::cos(t) + kI * a * std::sin(t);
  Complex r = 1.0;
  for (unsigned e = static_cast<unsigned>(n); e; e >>= 1) {
    if (e & 1u) r *= base;
    base *= base;
  }
  return r;
}

KernelSpec SuperFamily::kernel() const {
  switch (kind) {
    case Kind::fock: return KernelSpec::fock();
    case Kind::rbf_first:
    case Kind::rbf_second: return KernelSpec::rbf();
    case Kind::mittag_leffler: return KernelSpec::mittag_leffler(q);
    case Kind::touchard: return KernelSpec::touchard(p);
  }
  fail(ErrorKind::input, "unknown superoscillation family");
}

std::string SuperFamily::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::fock: os << "fock"; break;
    case Kind::rbf_first: os << "rbf-first"; break;
    case Kind::rbf_second: os << "rbf-second"; break;
    case Kind::mittag_leffler: os << "ml(q=" << q << ")"; break;
    case Kind::touchard: os << "touchard(p=" << p << ")"; break;
  }
  return os.str();
}

CoefficientExpansion as_expansion(const SuperFamily& family, const SuperoscParams& params) {
  params.validate();
  ComplexVector alpha = params.coefficients;
  if (family.kind == SuperFamily::Kind::rbf_first)
    for (std::size_t j = 0; j < alpha.size(); ++j)
      alpha[j] *= std::exp(-params.frequencies[j] * params.frequencies[j] / 2.0);
  return CoefficientExpansion(params.centers(), std::move(alpha), family.kernel());
}

Complex generate(const SuperFamily& family, const SuperoscParams& params, Complex z,
                 Precision precision) {
  const Complex zs[] = {z};
  return generate(family, params, zs, precision)[0];
}

ComplexVector generate(const SuperFamily& family, const SuperoscParams& params,
                       std::span<const Complex> z, Precision precision) {
  require_finite(z, "z");
  if (precision == Precision::extended) return detail::extended_generate(family, params, z);
  const CoefficientExpansion e = as_expansion(family, params);
  ComplexVector out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = evaluate(e, z[i]);
  return out;
}

Complex supershift_limit(const SuperFamily& family, double a, Complex z) {
  require_finite(z, "z");
  const Complex target(0.0, -a);
  switch (family.kind) {
    case SuperFamily::Kind::fock: return std::exp(kI * a * z);
    case SuperFamily::Kind::rbf_first: return std::exp(-z * z / 2.0 + kI * a * z);
    case SuperFamily::Kind::rbf_second: return rbf_kernel(z, target);
    case SuperFamily::Kind::mittag_leffler: return mittag_leffler_kernel(z, target, family.q);
    case SuperFamily::Kind::touchard: return touchard_kernel(z, target, family.p);
  }
  fail(ErrorKind::contract, "no known limit for this family");
}

double supershift_gap(const SuperFamily& family, const SuperoscParams& params, Complex z) {
  if (!params.classical)
    fail(ErrorKind::contract, "supershift limits are only known for classical parameters");
  return std::abs(generate(family, params, z, Precision::extended) -
                  supershift_limit(family, params.a, z));
}

Complex TruncatedSeries::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * z + coefficients[k];
  return acc;
}

TruncatedSeries touchard_operator(const TruncatedSeries& series, int p) {
  if (p < 0) fail(ErrorKind::input, "p must be nonnegative");
  require_finite(series.coefficients, "series coefficient");
  TruncatedSeries out = series;
  for (std::size_t k = 0; k < out.coefficients.size(); ++k)
    out.coefficients[k] *= std::pow(static_cast<double>(k + 1), 2 * p);
  return out;
}

TruncatedSeries taylor_coefficients(const SuperoscParams& params, int degree) {
  params.validate();
  if (degree < 0) fail(ErrorKind::input, "degree must be nonnegative");
  TruncatedSeries s;
  s.coefficients.assign(degree + 1, 0.0);
  for (std::size_t j = 0; j < params.frequencies.size(); ++j) {
    const Complex step = kI * params.frequencies[j];
    Complex term = params.coefficients[j];  // Z_j (i h_j)^k / k!
    for (int k = 0; k <= degree; ++k) {
      if (k > 0) term *= step / static_cast<double>(k);
      s.coefficients[k] += term;
    }
  }
  return s;
}

}  // namespace rkhs
