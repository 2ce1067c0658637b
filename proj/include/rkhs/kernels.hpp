#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numbers>
#include <string>
#include <vector>

#include "rkhs/types.hpp"

namespace rkhs {

enum class KernelFamily { fock, rbf, mittag_leffler, touchard, szego };

struct KernelSpec {
  KernelFamily family = KernelFamily::fock;
  double gamma = std::numbers::sqrt2;  // rbf
  double q = 1.0;                      // mittag_leffler
  int p = 0;                           // touchard
  double series_tol = 1e-15;
  int series_cap = 10000;

  static KernelSpec fock() { return {}; }
  static KernelSpec rbf(double gamma = std::numbers::sqrt2);
  static KernelSpec mittag_leffler(double q);
  static KernelSpec touchard(int p);
  static KernelSpec szego();

  /// Throws ErrorKind::input if a parameter violates its invariant.
  void validate() const;

  /// Short identifier, e.g. "fock", "rbf(gamma=1.41421)", "ml(q=2)".
  std::string label() const;

  /// Whether z lies in the kernel's domain (only Szego is restricted).
  bool in_domain(Complex z) const;

  bool operator==(const KernelSpec&) const = default;
};

std::string_view family_name(KernelFamily f);
KernelFamily parse_family(std::string_view name);

/// Gamma function on positive reals. Integer arguments up to 171 use an
/// exact factorial table.
double gamma_function(double x);

Complex fock_kernel(Complex z, Complex w);
Complex rbf_kernel(Complex z, Complex w, double gamma = std::numbers::sqrt2);
Complex mittag_leffler_kernel(Complex z, Complex w, double q, double tol = 1e-15,
                              int cap = 10000);
Complex touchard_kernel(Complex z, Complex w, int p, double tol = 1e-15, int cap = 10000);
Complex szego_kernel(Complex z, Complex w);

/// Dispatches on spec.family.
Complex kernel_eval(const KernelSpec& spec, Complex z, Complex w);

/// Mittag-Leffler series sum_n u^n / Gamma(qn + 1).
Complex mittag_leffler_series(Complex u, double q, double tol = 1e-15, int cap = 10000);

/// Series sum_k (k+1)^{2p} u^k / k!.
Complex touchard_series(Complex u, int p, double tol = 1e-15, int cap = 10000);

/// T_{2p+1}(u) e^u / u, with the removable singularity at u = 0 divided out.
Complex touchard_closed_form(Complex u, int p);

/// Stirling numbers of the second kind S(m, k), 0 <= k <= m <= 2p + 1, and the
/// coefficients of the Touchard polynomial T_{2p+1}(u) = sum_k S(2p+1, k) u^k.
struct TouchardTables {
  using Integer = boost::multiprecision::cpp_int;

  int p = 0;
  std::vector<std::vector<Integer>> stirling;
  std::vector<Integer> coeffs;

  /// Tables are built on first use and cached; the reference stays valid.
  static const TouchardTables& get(int p);

  /// Horner evaluation of T_{2p+1}(u).
  Complex polynomial(Complex u) const;
  const std::vector<double>& coeffs_double() const noexcept { return coeffs_d_; }

 private:
  friend struct TouchardTablesBuilder;
  std::vector<double> coeffs_d_;
};

}  // namespace rkhs
