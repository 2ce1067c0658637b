#include "rkhs/kernels.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "detail/kernel_math.hpp"

namespace rkhs {

namespace {

using LComplex = std::complex<long double>;

constexpr int kMaxFactorial = 170;

const std::array<double, kMaxFactorial + 1>& factorials() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> f{};
    f[0] = 1.0;
    for (int i = 1; i <= kMaxFactorial; ++i) f[i] = f[i - 1] * i;
    return f;
  }();
  return table;
}

void check_series_args(double tol, int cap) {
  if (!(tol > 0.0 && tol <= 1e-6)) fail(ErrorKind::input, "series_tol must lie in (0, 1e-6]");
  if (cap < 64) fail(ErrorKind::input, "series_cap must be at least 64");
}

// 1 / Gamma(qn + 1) in long double, switching to logarithms once Gamma overflows.
long double inv_gamma_ld(long double x) {
  const long double g = std::tgamma(x);
  if (std::isfinite(g)) return 1.0L / g;
  return std::exp(-std::lgamma(x));
}

}  // namespace

KernelSpec KernelSpec::rbf(double gamma) {
  KernelSpec k;
  k.family = KernelFamily::rbf;
  k.gamma = gamma;
  k.validate();
  return k;
}

KernelSpec KernelSpec::mittag_leffler(double q) {
  KernelSpec k;
  k.family = KernelFamily::mittag_leffler;
  k.q = q;
  k.validate();
  return k;
}

KernelSpec KernelSpec::touchard(int p) {
  KernelSpec k;
  k.family = KernelFamily::touchard;
  k.p = p;
  k.validate();
  return k;
}

KernelSpec KernelSpec::szego() {
  KernelSpec k;
  k.family = KernelFamily::szego;
  return k;
}

void KernelSpec::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) fail(ErrorKind::input, "gamma must be positive");
  if (!(q > 0.0) || !std::isfinite(q)) fail(ErrorKind::input, "q must be positive");
  if (p < 0) fail(ErrorKind::input, "p must be nonnegative");
  if (p > 40) fail(ErrorKind::range, "p above 40 is not supported");
  check_series_args(series_tol, series_cap);
}

std::string KernelSpec::label() const {
  std::ostringstream os;
  os << family_name(family);
  switch (family) {
    case KernelFamily::rbf: os << "(gamma=" << gamma << ")"; break;
    case KernelFamily::mittag_leffler: os << "(q=" << q << ")"; break;
    case KernelFamily::touchard: os << "(p=" << p << ")"; break;
    default: break;
  }
  return os.str();
}

bool KernelSpec::in_domain(Complex z) const {
  if (!is_finite(z)) return false;
  return family != KernelFamily::szego || std::abs(z) < 1.0;
}

std::string_view family_name(KernelFamily f) {
  switch (f) {
    case KernelFamily::fock: return "fock";
    case KernelFamily::rbf: return "rbf";
    case KernelFamily::mittag_leffler: return "ml";
    case KernelFamily::touchard: return "touchard";
    case KernelFamily::szego: return "szego";
  }
  return "?";
}

KernelFamily parse_family(std::string_view name) {
  if (name == "fock") return KernelFamily::fock;
  if (name == "rbf") return KernelFamily::rbf;
  if (name == "ml" || name == "mittag-leffler") return KernelFamily::mittag_leffler;
  if (name == "touchard") return KernelFamily::touchard;
  if (name == "szego") return KernelFamily::szego;
  fail(ErrorKind::input, "unknown kernel family '" + std::string(name) + "'");
}

double gamma_function(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) fail(ErrorKind::domain, "gamma_function needs x > 0");
  const double r = std::round(x);
  if (r == x && r <= kMaxFactorial + 1) return factorials()[static_cast<int>(r) - 1];
  return std::tgamma(x);
}

Complex fock_kernel(Complex z, Complex w) {
  require_finite(z, "z");
  require_finite(w, "w");
  return detail::fock(z, w);
}

Complex rbf_kernel(Complex z, Complex w, double gamma) {
  require_finite(z, "z");
  require_finite(w, "w");
  if (!(gamma > 0.0)) fail(ErrorKind::input, "gamma must be positive");
  return detail::rbf(z, w, gamma);
}

Complex mittag_leffler_series(Complex u, double q, double tol, int cap) {
  require_finite(u, "u");
  if (!(q > 0.0)) fail(ErrorKind::input, "q must be positive");
  check_series_args(tol, cap);
  const long double ql = q;
  const bool integer_q = q == std::round(q);
  long double fact = 1.0L;  // (qn)! when q is an integer
  int last = 0;
  auto inv_gamma = [&](int n) -> long double {
    if (integer_q) {
      // (qn)! built incrementally from ((q(n-1))!
      for (int m = last * static_cast<int>(q) + 1; m <= n * static_cast<int>(q); ++m) fact *= m;
      last = n;
      if (std::isfinite(fact)) return 1.0L / fact;
    }
    return inv_gamma_ld(ql * n + 1.0L);
  };
  LComplex sum;
  int used = 0;
  const bool ok = detail::mittag_leffler(LComplex(u), inv_gamma, static_cast<long double>(tol),
                                         cap, sum, used);
  if (!ok) throw NonConvergenceError("Mittag-Leffler", std::abs(u), q, used);
  return Complex(sum);
}

Complex touchard_series(Complex u, int p, double tol, int cap) {
  require_finite(u, "u");
  if (p < 0) fail(ErrorKind::input, "p must be nonnegative");
  check_series_args(tol, cap);
  LComplex sum;
  int used = 0;
  const bool ok =
      detail::touchard(LComplex(u), p, static_cast<long double>(tol), cap, sum, used);
  if (!ok) throw NonConvergenceError("Touchard", std::abs(u), p, used);
  return Complex(sum);
}

Complex touchard_closed_form(Complex u, int p) {
  require_finite(u, "u");
  const auto& t = TouchardTables::get(p);
  return detail::touchard_closed(u, t.coeffs_double());
}

Complex mittag_leffler_kernel(Complex z, Complex w, double q, double tol, int cap) {
  require_finite(z, "z");
  require_finite(w, "w");
  return mittag_leffler_series(z * std::conj(w), q, tol, cap);
}

Complex touchard_kernel(Complex z, Complex w, int p, double tol, int cap) {
  require_finite(z, "z");
  require_finite(w, "w");
  const Complex u = z * std::conj(w);
  if (std::abs(u) <= 1.0) return touchard_series(u, p, tol, cap);
  return touchard_closed_form(u, p);
}

Complex szego_kernel(Complex z, Complex w) {
  require_finite(z, "z");
  require_finite(w, "w");
  if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
    fail(ErrorKind::domain, "Szego kernel needs |z| < 1 and |w| < 1");
  return detail::szego(z, w);
}

Complex kernel_eval(const KernelSpec& spec, Complex z, Complex w) {
  switch (spec.family) {
    case KernelFamily::fock: return fock_kernel(z, w);
    case KernelFamily::rbf: return rbf_kernel(z, w, spec.gamma);
    case KernelFamily::mittag_leffler:
      return mittag_leffler_kernel(z, w, spec.q, spec.series_tol, spec.series_cap);
    case KernelFamily::touchard:
      return touchard_kernel(z, w, spec.p, spec.series_tol, spec.series_cap);
    case KernelFamily::szego: return szego_kernel(z, w);
  }
  fail(ErrorKind::input, "unknown kernel family");
}

struct TouchardTablesBuilder {
  static std::unique_ptr<TouchardTables> build(int p) {
    using Integer = TouchardTables::Integer;
    auto t = std::make_unique<TouchardTables>();
    t->p = p;
    const int m = 2 * p + 1;
    t->stirling.assign(m + 1, {});
    t->stirling[0] = {Integer(1)};
    for (int r = 1; r <= m; ++r) {
      auto& row = t->stirling[r];
      const auto& prev = t->stirling[r - 1];
      row.assign(r + 1, Integer(0));
      for (int k = 1; k <= r; ++k) {
        Integer v = k < r ? Integer(k) * prev[k] : Integer(0);
        v += prev[k - 1];
        row[k] = v;
      }
    }
    t->coeffs = t->stirling[m];
    for (const auto& c : t->coeffs) t->coeffs_d_.push_back(c.convert_to<double>());
    return t;
  }
};

const TouchardTables& TouchardTables::get(int p) {
  if (p < 0) fail(ErrorKind::input, "p must be nonnegative");
  if (p > 40) fail(ErrorKind::range, "p above 40 is not supported");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TouchardTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = TouchardTablesBuilder::build(p);
  return *slot;
}

Complex TouchardTables::polynomial(Complex u) const {
  Complex acc = 0.0;
  for (std::size_t k = coeffs_d_.size(); k-- > 0;) acc = acc * u + coeffs_d_[k];
  return acc;
}

}  // namespace rkhs
