#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rkhs/gram.hpp"
#include "rkhs/kernels.hpp"

using namespace rkhs;

TEST_CASE("Fock and RBF kernels against direct exponentials") {
  const Complex z(0.3, -0.4), w(-0.2, 0.9);
  CHECK(std::abs(fock_kernel(z, w) - std::exp(z * std::conj(w))) < 1e-15);
  const Complex d = z - std::conj(w);
  CHECK(std::abs(rbf_kernel(z, w, 1.5) - std::exp(-d * d / 2.25)) < 1e-15);
}

TEST_CASE("Hermitian symmetry K(w, z) = conj K(z, w)") {
  std::mt19937_64 rng(5);
  const std::vector<KernelSpec> specs = {KernelSpec::fock(), KernelSpec::rbf(),
                                         KernelSpec::mittag_leffler(0.5), KernelSpec::touchard(2),
                                         KernelSpec::szego()};
  for (const auto& s : specs) {
    for (int i = 0; i < 20; ++i) {
      const Complex z = oracle::in_disk(rng, 0.9), w = oracle::in_disk(rng, 0.9);
      CHECK(std::abs(kernel_eval(s, w, z) - std::conj(kernel_eval(s, z, w))) <
            1e-14 * std::abs(kernel_eval(s, z, w)));
    }
  }
}

TEST_CASE("Mittag-Leffler special cases") {
  for (double r : {-3.0, -0.5, 0.0, 0.7, 4.0}) {
    const Complex u(r, 0.3 * r);
    // E_1(u) = e^u, E_2(u) = cosh(sqrt u)
    CHECK(oracle::rel(mittag_leffler_series(u, 1.0), std::exp(u)) < 1e-14);
    CHECK(oracle::rel(mittag_leffler_series(u, 2.0), std::cosh(std::sqrt(u))) < 1e-14);
  }
  // E_{1/2}(x) = e^{x^2} erfc(-x) for real x
  for (double x : {-1.0, 0.25, 1.5})
    CHECK(oracle::rel(mittag_leffler_series(x, 0.5), std::exp(x * x) * std::erfc(-x)) < 1e-13);
}

TEST_CASE("Gamma is exact at integers") {
  CHECK(gamma_function(5.0) == 24.0);
  CHECK(gamma_function(1.0) == 1.0);
  CHECK(gamma_function(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
}

TEST_CASE("Touchard kernel: p = 0 is exp, series and closed form agree") {
  CHECK(oracle::rel(touchard_series(Complex(0.4, 0.2), 0), std::exp(Complex(0.4, 0.2))) < 1e-15);
  for (int p = 1; p <= 3; ++p) {
    for (const Complex u : {Complex(0.9, 0.1), Complex(-0.5, 0.6), Complex(1.0, 0.0)}) {
      CHECK(oracle::rel(touchard_closed_form(u, p), touchard_series(u, p)) < 1e-13);
    }
  }
  // sum_k (k+1)^2 u^k / k! = (1 + 3u + u^2) e^u
  const Complex u(2.5, -1.0);
  CHECK(oracle::rel(touchard_kernel(u, 1.0, 1), (1.0 + 3.0 * u + u * u) * std::exp(u)) < 1e-14);
}

TEST_CASE("Stirling numbers of the second kind") {
  const auto& t = TouchardTables::get(2);  // rows up to m = 5
  const std::vector<int> row5 = {0, 1, 15, 25, 10, 1};
  for (int k = 0; k <= 5; ++k) CHECK(t.stirling[5][k] == row5[k]);
  CHECK(t.coeffs.size() == 6);
  // T_5(1) is the Bell number B_5 = 52
  CHECK(t.polynomial(1.0) == Complex(52.0));
}

TEST_CASE("series cap raises NonConvergenceError") {
  try {
    (void)mittag_leffler_series(200.0, 1.0, 1e-15, 64);
    FAIL("expected throw");
  } catch (const NonConvergenceError& e) {
    CHECK(e.kind() == ErrorKind::non_convergence);
    CHECK(e.abs_argument() == 200.0);
  }
}

TEST_CASE("Szego kernel domain and spec validation") {
  CHECK(oracle::rel(szego_kernel(0.5, Complex(0, 0.5)), 1.0 / (1.0 - 0.5 * Complex(0, -0.5))) < 1e-15);
  CHECK_THROWS_AS(szego_kernel(1.0, 0.0), Error);
  CHECK_FALSE(KernelSpec::szego().in_domain(Complex(0.6, 0.8)));
  CHECK_THROWS_AS(KernelSpec::mittag_leffler(0.0).validate(), Error);
  CHECK_THROWS_AS(KernelSpec::rbf(-1.0).validate(), Error);
  CHECK(parse_family("mittag-leffler") == KernelFamily::mittag_leffler);
  CHECK(family_name(KernelFamily::touchard) == "touchard");
}

TEST_CASE("Gram matrices are positive semidefinite") {
  std::mt19937_64 rng(9);
  const auto pts = oracle::in_disk(rng, 0.9, 24);
  for (const auto& s : {KernelSpec::fock(), KernelSpec::rbf(), KernelSpec::mittag_leffler(2.0),
                        KernelSpec::touchard(1), KernelSpec::szego()}) {
    const auto c = check_psd(gram_matrix(s, pts));
    CHECK(c.positive_semidefinite);
    CHECK(c.range.min >= -1e-10 * c.range.max);
  }
}
