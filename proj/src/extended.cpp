#include "detail/extended.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "detail/kernel_math.hpp"
#include "rkhs/parallel.hpp"

namespace rkhs::detail {

namespace {

namespace mp = boost::multiprecision;

using XReal = mp::number<mp::cpp_bin_float<100>, mp::et_off>;
using XComplex = mp::number<mp::complex_adaptor<mp::cpp_bin_float<100>>, mp::et_off>;

const XReal& series_tol() {
  static const XReal tol("1e-95");
  return tol;
}

XComplex to_x(Complex z) { return XComplex(XReal(z.real()), XReal(z.imag())); }

Complex from_x(const XComplex& z) {
  return {static_cast<double>(XReal(real(z))), static_cast<double>(XReal(imag(z)))};
}

/// Frequencies and coefficients lifted to extended precision. Classical
/// parameters are rebuilt from (n, a) so no binary64 rounding enters.
struct XParams {
  std::vector<XReal> h;
  std::vector<XComplex> z;
};

XParams lift(const SuperoscParams& params) {
  params.validate();
  XParams x;
  const std::size_t m = params.frequencies.size();
  x.h.resize(m);
  x.z.resize(m);
  if (!params.classical) {
    for (std::size_t j = 0; j < m; ++j) {
      x.h[j] = XReal(params.frequencies[j]);
      x.z[j] = to_x(params.coefficients[j]);
    }
    return x;
  }
  const int n = params.n;
  const XReal a(params.a);
  const XReal b1 = (1 + a) / 2;
  const XReal b2 = (1 - a) / 2;
  mp::cpp_int binom = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) binom = binom * (n - j + 1) / j;
    x.h[j] = XReal(n - 2 * j) / n;
    x.z[j] = XComplex(XReal(binom) * pow(b1, n - j) * pow(b2, j));
  }
  return x;
}

class XKernel {
 public:
  explicit XKernel(const SuperFamily& family) : family_(family) {
    if (family.kind == SuperFamily::Kind::mittag_leffler) {
      if (!(family.q > 0.0)) fail(ErrorKind::input, "q must be positive");
      q_ = XReal(family.q);
    }
    if (family.kind == SuperFamily::Kind::touchard) {
      for (const auto& c : TouchardTables::get(family.p).coeffs) touchard_coeffs_.emplace_back(c);
    }
  }

  XComplex operator()(const XComplex& z, const XComplex& w) {
    switch (family_.kind) {
      case SuperFamily::Kind::fock: return fock(z, w);
      case SuperFamily::Kind::rbf_first:
      case SuperFamily::Kind::rbf_second: return rbf(z, w, XReal(mp::sqrt(XReal(2))));
      case SuperFamily::Kind::mittag_leffler: return ml(z * conj(w));
      case SuperFamily::Kind::touchard: return touchard_k(z * conj(w));
    }
    return XComplex(0);
  }

 private:
  XComplex ml(const XComplex& u) {
    XComplex sum;
    int used = 0;
    auto inv_gamma = [this](int n) { return inv_gamma_at(n); };
    if (!mittag_leffler(u, inv_gamma, series_tol(), 100000, sum, used))
      throw NonConvergenceError("Mittag-Leffler", static_cast<double>(XReal(abs(u))), family_.q,
                                used);
    return sum;
  }

  XComplex touchard_k(const XComplex& u) {
    if (abs(u) > 1) return touchard_closed(u, touchard_coeffs_);
    XComplex sum;
    int used = 0;
    if (!touchard(u, family_.p, series_tol(), 100000, sum, used))
      throw NonConvergenceError("Touchard", static_cast<double>(XReal(abs(u))), family_.p, used);
    return sum;
  }

  // 1 / Gamma(qn + 1), cached; filled in order because the series asks for
  // n = 0, 1, 2, ...
  const XReal& inv_gamma_at(int n) {
    while (static_cast<int>(inv_gamma_.size()) <= n) {
      const int m = static_cast<int>(inv_gamma_.size());
      inv_gamma_.push_back(1 / boost::math::tgamma(q_ * m + 1));
    }
    return inv_gamma_[n];
  }

  SuperFamily family_;
  XReal q_{1};
  std::vector<XReal> inv_gamma_;
  std::vector<XReal> touchard_coeffs_;
};

XComplex center(const XReal& h) { return XComplex(XReal(0), -h); }

std::vector<XComplex> weights(const SuperFamily& family, const XParams& x) {
  std::vector<XComplex> alpha = x.z;
  if (family.kind == SuperFamily::Kind::rbf_first)
    for (std::size_t j = 0; j < alpha.size(); ++j) alpha[j] *= exp(-x.h[j] * x.h[j] / 2);
  return alpha;
}

}  // namespace

ComplexVector extended_generate(const SuperFamily& family, const SuperoscParams& params,
                                std::span<const Complex> z) {
  const XParams x = lift(params);
  const std::vector<XComplex> alpha = weights(family, x);
  std::vector<XComplex> c(x.h.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = center(x.h[j]);

  ComplexVector out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    XKernel kernel(family);
    const XComplex zi = to_x(z[i]);
    XComplex s(0);
    for (std::size_t j = 0; j < c.size(); ++j) s += alpha[j] * kernel(zi, c[j]);
    out[i] = from_x(s);
  }
  return out;
}

ComplexVector extended_outputs(const SuperFamily& family, const SuperoscParams& params,
                               double lambda) {
  const XParams x = lift(params);
  const std::vector<XComplex> alpha = weights(family, x);
  const std::size_t m = x.h.size();
  std::vector<XComplex> c(m);
  for (std::size_t j = 0; j < m; ++j) c[j] = center(x.h[j]);

  std::vector<XComplex> gram(m * m);
  parallel_for(m, [&](std::size_t k) {
    XKernel kernel(family);
    for (std::size_t j = k; j < m; ++j) {
      gram[k * m + j] = kernel(c[k], c[j]);
      gram[j * m + k] = conj(gram[k * m + j]);
    }
  });

  const XReal lam(lambda);
  ComplexVector w(m);
  for (std::size_t k = 0; k < m; ++k) {
    XComplex s = lam * alpha[k];
    for (std::size_t j = 0; j < m; ++j) s += gram[k * m + j] * alpha[j];
    w[k] = from_x(s);
  }
  return w;
}

ComplexVector extended_fock_formula(const SuperoscParams& params, double lambda) {
  const XParams x = lift(params);
  const std::size_t m = x.h.size();
  const XReal lam(lambda);
  ComplexVector w(m);
  for (std::size_t k = 0; k < m; ++k) {
    XComplex s = lam * x.z[k];
    for (std::size_t j = 0; j < m; ++j) s += x.z[j] * exp(x.h[j] * x.h[k]);
    w[k] = from_x(s);
  }
  return w;
}

ComplexVector extended_rbf_second_formula(const SuperoscParams& params, double lambda) {
  const XParams x = lift(params);
  const std::size_t m = x.h.size();
  const XReal lam(lambda);
  ComplexVector w(m);
  for (std::size_t k = 0; k < m; ++k) {
    XComplex s(0);
    for (std::size_t j = 0; j < m; ++j) s += x.z[j] * exp(x.h[j] * x.h[j] / 2 + x.h[k] * x.h[j]);
    s *= exp(x.h[k] * x.h[k] / 2);
    s += lam * x.z[k];
    w[k] = from_x(s);
  }
  return w;
}

}  // namespace rkhs::detail

namespace rkhs::detail {

ComplexVector extended_moment_outputs(const SuperFamily& family, const SuperoscParams& params,
                                      double lambda) {
  if (family.kind != SuperFamily::Kind::mittag_leffler && family.kind != SuperFamily::Kind::touchard)
    fail(ErrorKind::contract, "moment form needs a Mittag-Leffler or Touchard family");
  if (family.kind == SuperFamily::Kind::mittag_leffler && !(family.q > 0.0))
    fail(ErrorKind::input, "q must be positive");
  const XParams x = lift(params);
  const std::size_t size = x.h.size();

  XReal total(0);
  for (const auto& z : x.z) total += abs(z);
  const XReal q(family.q);
  const XReal cutoff = XReal("1e-95") / (total > 1 ? total : XReal(1));

  // Power-series coefficient c_m of K(u) = sum_m c_m u^m.
  XReal factorial(1);
  auto coefficient = [&](int m) -> XReal {
    if (family.kind == SuperFamily::Kind::mittag_leffler) return 1 / boost::math::tgamma(q * m + 1);
    if (m > 0) factorial *= m;
    return pow(XReal(m + 1), 2 * family.p) / factorial;
  };

  std::vector<XComplex> moment(size);  // running Z_j h_j^m
  for (std::size_t j = 0; j < size; ++j) moment[j] = x.z[j];
  std::vector<XComplex> acc(size);
  std::vector<XReal> hk_power(size, XReal(1));
  int quiet = 0;
  for (int m = 0;; ++m) {
    if (m >= 100000) throw NonConvergenceError(family.label(), 1.0, family.q, m);
    const XReal c = coefficient(m);
    XComplex mu(0);
    for (std::size_t j = 0; j < size; ++j) {
      mu += moment[j];
      moment[j] *= x.h[j];
    }
    for (std::size_t k = 0; k < size; ++k) {
      acc[k] += c * hk_power[k] * mu;
      hk_power[k] *= x.h[k];
    }
    quiet = c <= cutoff ? quiet + 1 : 0;
    if (quiet == 3) break;
  }
  const XReal lam(lambda);
  ComplexVector w(size);
  for (std::size_t k = 0; k < size; ++k) w[k] = from_x(acc[k] + lam * x.z[k]);
  return w;
}

}  // namespace rkhs::detail
