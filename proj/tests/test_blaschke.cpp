#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rkhs/blaschke.hpp"

using namespace rkhs;

TEST_CASE("Blaschke product vanishes at its roots and is unimodular on the circle") {
  std::mt19937_64 rng(41);
  const auto b = random_blaschke(rng, 6);
  for (const auto& a : b.roots()) CHECK(std::abs(blaschke_eval(b, a)) < 1e-15);
  for (int i = 0; i < 12; ++i)
    CHECK(std::abs(blaschke_eval(b, std::polar(1.0, 0.5 * i))) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("derivative at a root against a central difference") {
  const BlaschkeProduct b({Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.1, -0.6)});
  for (std::size_t j = 0; j < b.size(); ++j) {
    const Complex a = b.roots()[j];
    const double h = 1e-5;
    const Complex fd = (blaschke_eval(b, a + h) - blaschke_eval(b, a - h)) / (2.0 * h);
    CHECK(std::abs(blaschke_derivative_at_root(b, j) - fd) < 1e-8);
  }
}

TEST_CASE("kernel expansion of the Blaschke product") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 5; ++t) {
    const auto b = random_blaschke(rng, 1 + t * 2);
    const auto c = blaschke_coefficients(b);
    for (int i = 0; i < 10; ++i) {
      const Complex z = oracle::in_disk(rng, 0.95);
      CHECK(std::abs(blaschke_kernel_sum(b, c, z) - blaschke_eval(b, z)) < 1e-10);
    }
  }
}

TEST_CASE("Blaschke outputs against the Szego Gram oracle") {
  std::mt19937_64 rng(43);
  for (double lambda : {0.0, 0.5, 2.0}) {
    const auto b = random_blaschke(rng, 8);
    CHECK(max_rel_err(blaschke_outputs(b, lambda), blaschke_oracle_outputs(b, lambda)) < 1e-10);
  }
}

TEST_CASE("root validation and placement") {
  CHECK_THROWS_AS(BlaschkeProduct({Complex(1.0, 0.0)}), Error);
  CHECK_THROWS_AS(BlaschkeProduct({Complex(0.0, 0.0)}), Error);
  CHECK_THROWS_AS(BlaschkeProduct({0.5, 0.5}), Error);
  std::mt19937_64 rng(44);
  const auto b = random_blaschke(rng, 10);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(std::abs(b.roots()[i]) >= 0.1);
    CHECK(std::abs(b.roots()[i]) <= 0.9);
    for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(std::abs(b.roots()[i] - b.roots()[j]) >= 0.15);
  }
  CHECK_THROWS_AS(blaschke_outputs(b, -1.0), Error);
}
