#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rkhs/superosc.hpp"

using namespace rkhs;

TEST_CASE("classical coefficients") {
  const auto p = classical_params(4, 3.0);
  // C_j(4, 3) = binom(4, j) 2^{4-j} (-1)^j
  const std::vector<double> want = {16, -32, 24, -8, 1};
  for (int j = 0; j <= 4; ++j) {
    CHECK(p.coefficients[j] == Complex(want[j]));
    CHECK(p.frequencies[j] == doctest::Approx(1.0 - j / 2.0));
  }
  CHECK(p.centers()[1] == Complex(0.0, -0.5));
  CHECK_THROWS_AS(classical_params(0, 2.0), Error);
}

TEST_CASE("sum of classical coefficients is one") {
  for (int n = 1; n <= 100; ++n) {
    const auto p = classical_params(n, 2.0);
    CHECK(std::abs(generate(SuperFamily::fock(), p, 0.0, Precision::extended) - 1.0) < 1e-13);
  }
}

TEST_CASE("large-n coefficients match exact binomials in log space") {
  const auto p = classical_params(80, 2.0);
  const double b1 = 1.5, b2 = -0.5;
  for (int j : {0, 7, 40, 80}) {
    const double want = std::exp(std::lgamma(81.0) - std::lgamma(j + 1.0) - std::lgamma(81.0 - j)) *
                        std::pow(b1, 80 - j) * std::pow(b2, j);
    CHECK(oracle::rel(p.coefficients[j], want) < 1e-12);
  }
}

TEST_CASE("product form equals the kernel sum") {
  for (double a : {1.5, 2.0, 4.0}) {
    for (int n : {1, 3, 8, 25}) {
      const auto p = classical_params(n, a);
      for (double x : {-2.5, -0.3, 0.0, 1.7}) {
        const Complex prod = oracle::superosc_product(x, n, a);
        CHECK(oracle::rel(classical_product_form(x, n, a), prod) < 1e-13);
        CHECK(oracle::rel(generate(SuperFamily::fock(), p, x, Precision::extended), prod) < 1e-11);
      }
    }
  }
}

TEST_CASE("binary64 and extended generate agree at small n") {
  const auto p = classical_params(6, 2.0);
  for (const auto& f : {SuperFamily::fock(), SuperFamily::rbf_first(), SuperFamily::rbf_second(),
                        SuperFamily::mittag_leffler(0.5), SuperFamily::touchard(1)}) {
    const Complex z(0.4, -0.2);
    CHECK(oracle::rel(generate(f, p, z), generate(f, p, z, Precision::extended)) < 1e-11);
  }
}

TEST_CASE("custom parameters are validated") {
  CHECK_THROWS_AS(SuperoscParams::custom(2.0, {0.5, 1.5}, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(SuperoscParams::custom(2.0, {0.5}, {1.0, 1.0}), Error);
  const auto p = SuperoscParams::custom(2.0, {0.5, -0.25}, {2.0, Complex(0, 1)});
  CHECK(p.n == 1);
  CHECK_FALSE(p.classical);
  const Complex x = 0.8;
  const Complex want = 2.0 * std::exp(kI * 0.5 * x) + kI * std::exp(-kI * 0.25 * x);
  CHECK(oracle::rel(generate(SuperFamily::fock(), p, x), want) < 1e-15);
  CHECK_THROWS_AS(supershift_gap(SuperFamily::fock(), p, 0.0), Error);
}

TEST_CASE("RBF first type factors through the Fock sum") {
  std::mt19937_64 rng(31);
  for (int n : {4, 12, 30}) {
    const auto p = classical_params(n, 2.0);
    for (int i = 0; i < 5; ++i) {
      const Complex z = oracle::in_disk(rng, 2.0);
      const Complex f = generate(SuperFamily::fock(), p, z, Precision::extended);
      const Complex r = generate(SuperFamily::rbf_first(), p, z, Precision::extended);
      CHECK(oracle::rel(std::exp(z * z / 2.0) * r, f) < 1e-10);
    }
  }
}

TEST_CASE("Taylor coefficients against the brute-force expansion") {
  const auto p = classical_params(5, 2.0);
  const auto s = taylor_coefficients(p, 6);
  REQUIRE(s.coefficients.size() == 7);
  for (int k = 0; k <= 6; ++k) {
    Complex want = 0.0;
    for (int j = 0; j <= 5; ++j)
      want += p.coefficients[j] * std::pow(kI * p.frequencies[j], k) / oracle::factorial(k);
    CHECK(std::abs(s.coefficients[k] - want) < 1e-13);
  }
}

TEST_CASE("Touchard operator on the Taylor series gives the Touchard family") {
  const auto p = classical_params(10, 2.0);
  for (int pp = 0; pp <= 2; ++pp) {
    const auto t = touchard_operator(taylor_coefficients(p, 60), pp);
    for (const Complex z : {Complex(0.5, 0.0), Complex(-0.2, 0.3), Complex(0.0, -0.45)}) {
      const Complex want = generate(SuperFamily::touchard(pp), p, z, Precision::extended);
      CHECK(oracle::rel(t.evaluate(z), want) < 1e-9);
    }
  }
}

TEST_CASE("supershift gaps shrink with n") {
  for (const auto& f : {SuperFamily::fock(), SuperFamily::rbf_first(), SuperFamily::rbf_second(),
                        SuperFamily::mittag_leffler(2.0), SuperFamily::touchard(1)}) {
    const double g40 = supershift_gap(f, classical_params(40, 2.0), 0.5);
    const double g160 = supershift_gap(f, classical_params(160, 2.0), 0.5);
    CHECK_MESSAGE(g160 < g40, f.label());
  }
}
