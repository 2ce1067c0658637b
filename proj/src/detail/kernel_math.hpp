#pragma once

// Kernel formulas written once over a generic complex type so the binary64
// library path and the extended-precision path share the same code.

#include <cmath>
#include <complex>
#include <vector>

namespace rkhs::detail {

/// Adds term(0), term(1), ... until three consecutive terms satisfy
/// |term| <= tol |sum| or `cap` terms have been used. Returns false on cap.
template <class C, class R, class TermFn>
bool sum_series(TermFn&& term, const R& tol, int cap, C& sum, int& used) {
  using std::abs;
  sum = C(0);
  int quiet = 0;
  for (int k = 0; k < cap; ++k) {
    const C t = term(k);
    sum += t;
    if (abs(t) <= tol * abs(sum)) {
      if (++quiet == 3) {
        used = k + 1;
        return true;
      }
    } else {
      quiet = 0;
    }
  }
  used = cap;
  return false;
}

template <class C>
C fock(const C& z, const C& w) {
  using std::conj;
  using std::exp;
  return exp(z * conj(w));
}

template <class C, class R>
C rbf(const C& z, const C& w, const R& gamma) {
  using std::conj;
  using std::exp;
  const C d = z - conj(w);
  return exp(-(d * d) / (gamma * gamma));
}

/// sum_n u^n * inv_gamma(n), inv_gamma(n) = 1 / Gamma(qn + 1).
template <class C, class R, class InvGamma>
bool mittag_leffler(const C& u, InvGamma&& inv_gamma, const R& tol, int cap, C& sum, int& used) {
  C power(1);
  auto term = [&](int n) {
    if (n > 0) power *= u;
    return power * inv_gamma(n);
  };
  return sum_series(term, tol, cap, sum, used);
}

/// sum_k (k+1)^{2p} u^k / k!
template <class C, class R>
bool touchard(const C& u, int p, const R& tol, int cap, C& sum, int& used) {
  C power(1);  // u^k / k!
  auto term = [&](int k) {
    if (k > 0) power *= u / R(k);
    R mult(1);
    const R base(k + 1);
    for (int i = 0; i < 2 * p; ++i) mult *= base;
    return power * mult;
  };
  return sum_series(term, tol, cap, sum, used);
}

/// (sum_{k>=1} c_k u^{k-1}) e^u, i.e. T(u) e^u / u for a polynomial T with
/// T(0) = 0. `coeffs[k]` is the coefficient of u^k.
template <class C, class R>
C touchard_closed(const C& u, const std::vector<R>& coeffs) {
  using std::exp;
  C acc(0);
  for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * u + C(coeffs[k]);
  return acc * exp(u);
}

template <class C>
C szego(const C& z, const C& w) {
  using std::conj;
  using std::norm;
  // conj(d) / |d|^2 keeps K(w, z) == conj(K(z, w)) exact.
  const C d = C(1) - z * conj(w);
  return conj(d) / norm(d);
}

}  // namespace rkhs::detail
