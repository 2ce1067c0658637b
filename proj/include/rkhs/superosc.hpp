#pragma once

#include <span>
#include <string>
#include <vector>

#include "rkhs/kernels.hpp"
#include "rkhs/representer.hpp"

namespace rkhs {

/// f_n(x) = sum_j Z_j e^{i h_j x}, j = 0..n, with |h_j| <= 1.
struct SuperoscParams {
  int n = 0;
  double a = 1.0;
  std::vector<double> frequencies;  // h_j
  ComplexVector coefficients;       // Z_j
  /// Set by classical_params: h_j = 1 - 2j/n and Z_j = C_j(n, a). Extended
  /// precision paths rebuild both exactly from (n, a) when this is set.
  bool classical = false;

  /// Arbitrary frequencies and coefficients; n = size - 1.
  static SuperoscParams custom(double a, std::vector<double> h, ComplexVector z);

  /// Centers z_j = -i h_j.
  ComplexVector centers() const;

  void validate() const;
};

/// h_j = 1 - 2j/n, C_j(n, a) = binom(n, j) ((1+a)/2)^{n-j} ((1-a)/2)^j.
SuperoscParams classical_params(int n, double a);

/// (cos(x/n) + i a sin(x/n))^n.
Complex classical_product_form(Complex x, int n, double a);

/// Kernel sums with centers -i h_j:
///   fock          sum Z_j B(z, -i h_j)
///   rbf_first     sum Z_j e^{-h_j^2/2} K_{sqrt2}(z, -i h_j)
///   rbf_second    sum Z_j K_{sqrt2}(z, -i h_j)
///   mittag_leffler sum Z_j E_q(z, -i h_j)
///   touchard      sum Z_j K_p(z, -i h_j)
struct SuperFamily {
  enum class Kind { fock, rbf_first, rbf_second, mittag_leffler, touchard };
  Kind kind = Kind::fock;
  double q = 1.0;
  int p = 0;

  static SuperFamily fock() { return {Kind::fock}; }
  static SuperFamily rbf_first() { return {Kind::rbf_first}; }
  static SuperFamily rbf_second() { return {Kind::rbf_second}; }
  static SuperFamily mittag_leffler(double q) { return {Kind::mittag_leffler, q, 0}; }
  static SuperFamily touchard(int p) { return {Kind::touchard, 1.0, p}; }

  KernelSpec kernel() const;
  std::string label() const;
};

/// The family as a kernel expansion (centers -i h_j, coefficients Z_j, with
/// the e^{-h_j^2/2} weight folded in for rbf_first).
CoefficientExpansion as_expansion(const SuperFamily& family, const SuperoscParams& params);

Complex generate(const SuperFamily& family, const SuperoscParams& params, Complex z,
                 Precision precision = Precision::binary64);
ComplexVector generate(const SuperFamily& family, const SuperoscParams& params,
                       std::span<const Complex> z, Precision precision = Precision::binary64);

/// Limit of the classical sequence as n grows: e^{iaz}, e^{-z^2/2} e^{iaz},
/// K_{sqrt2}(z, -ia), E_q(z, -ia) or K_p(z, -ia).
Complex supershift_limit(const SuperFamily& family, double a, Complex z);

/// |generate(family, params, z) - supershift_limit(family, a, z)|, the sum
/// taken in extended precision. Requires classical params.
double supershift_gap(const SuperFamily& family, const SuperoscParams& params, Complex z);

/// Power series sum_k a_k z^k.
struct TruncatedSeries {
  ComplexVector coefficients;
  Complex evaluate(Complex z) const;
};

/// a_k -> (1 + k)^{2p} a_k, the action of (I + z d/dz)^{2p} on monomials.
TruncatedSeries touchard_operator(const TruncatedSeries& series, int p);

/// Taylor coefficients of sum_j Z_j e^{i h_j z} through `degree`.
TruncatedSeries taylor_coefficients(const SuperoscParams& params, int degree);

}  // namespace rkhs
