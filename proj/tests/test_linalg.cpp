#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rkhs/gram.hpp"
#include "rkhs/linalg.hpp"

using namespace rkhs;

namespace {

HermitianMatrix random_spd(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<Complex> b(n * n);
  for (auto& v : b) v = {g(rng), g(rng)};
  // B B^* + I
  return HermitianMatrix::from_upper(n, [&](std::size_t i, std::size_t j) {
    Complex s = i == j ? 1.0 : 0.0;
    for (std::size_t k = 0; k < n; ++k) s += b[i * n + k] * std::conj(b[j * n + k]);
    return s;
  });
}

}  // namespace

TEST_CASE("from_upper mirrors exact conjugates and drops diagonal imaginary parts") {
  const auto a = HermitianMatrix::from_upper(3, [](std::size_t i, std::size_t j) {
    return Complex(double(i + j), double(j) - double(i) + (i == j ? 0.7 : 0.0));
  });
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a(i, i).imag() == 0.0);
    for (std::size_t j = 0; j < 3; ++j) CHECK(a(j, i) == std::conj(a(i, j)));
  }
}

TEST_CASE("from_dense rejects a non-Hermitian matrix") {
  std::vector<Complex> d = {1.0, Complex(0, 1), Complex(0, 1), 1.0};
  CHECK_THROWS_AS(HermitianMatrix::from_dense(2, d), Error);
}

TEST_CASE("LDL solve leaves a small residual") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 4u, 17u, 40u, 256u}) {
    const auto a = random_spd(rng, n);
    const std::vector<Complex> b = oracle::in_disk(rng, 1.0, n);
    const auto x = hermitian_solve(a, 0.5, b);
    const auto r = a.multiply(x, 0.5);
    CHECK(oracle::rel(r, b) < 1e-10);
  }
}

TEST_CASE("LDL pivots multiply to the determinant of a 2x2") {
  const auto a = HermitianMatrix::from_dense(2, {4.0, Complex(1, 1), Complex(1, -1), 3.0});
  const LdlFactorization f(a);
  CHECK(f.pivots()[0] * f.pivots()[1] == doctest::Approx(10.0));
  CHECK(f.pivot_ratio() == doctest::Approx(4.0 / 2.5));
}

TEST_CASE("singular and indefinite matrices raise NotPositiveDefiniteError") {
  const auto singular = HermitianMatrix::from_dense(2, {1.0, 1.0, 1.0, 1.0});
  CHECK_THROWS_AS(LdlFactorization{singular}, NotPositiveDefiniteError);
  const auto indefinite = HermitianMatrix::diagonal(std::vector<double>{1.0, -2.0});
  try {
    LdlFactorization f(indefinite);
    FAIL("expected throw");
  } catch (const NotPositiveDefiniteError& e) {
    CHECK(e.pivot() == 1);
    CHECK(e.pivot_value() == -2.0);
  }
  CHECK_NOTHROW(LdlFactorization(indefinite, 3.0));
}

TEST_CASE("eigen_range of a diagonal matrix") {
  const auto d = HermitianMatrix::diagonal(std::vector<double>{3.0, -1.0, 2.0});
  const auto r = eigen_range(d);
  CHECK(r.min == doctest::Approx(-1.0));
  CHECK(r.max == doctest::Approx(3.0));
}

TEST_CASE("quadratic form is nonnegative for a Gram matrix") {
  std::mt19937_64 rng(3);
  const auto pts = oracle::in_disk(rng, 1.0, 12);
  const auto k = gram_matrix(KernelSpec::fock(), pts);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = oracle::in_disk(rng, 1.0, 12);
    CHECK(k.quadratic_form(c) >= -1e-12);
  }
}

TEST_CASE("Wirtinger gradient agrees with central differences") {
  std::mt19937_64 rng(11);
  const auto a = random_spd(rng, 6);
  const auto c = oracle::in_disk(rng, 1.0, 6);
  const auto z = oracle::in_disk(rng, 1.0, 6);
  CHECK(wirtinger_gradient_check(a, c, z, 1e-5) < 1e-6);
  CHECK_THROWS_AS(wirtinger_gradient_check(a, c, z, 1.0), Error);
}

TEST_CASE("gradient of the linear and quadratic terms") {
  const std::vector<Complex> z0 = {Complex(1, 1), 0.0};
  const auto zero = HermitianMatrix::diagonal(std::vector<double>{0.0, 0.0});
  const std::vector<Complex> c = {1.0, 0.0};
  const auto g = wirtinger_gradient(zero, c, z0);
  CHECK(g[0] == Complex(1.0));
  CHECK(g[1] == Complex(0.0));
  CHECK(wirtinger_gradient_check(zero, c, z0, 1e-6) < 1e-6);

  const auto id = HermitianMatrix::identity(2);
  const std::vector<Complex> none = {0.0, 0.0};
  const auto gi = wirtinger_gradient(id, none, z0);
  CHECK(gi[0] == std::conj(z0[0]));
  CHECK(wirtinger_gradient_check(id, none, z0, 1e-6) < 1e-6);

  std::mt19937_64 rng(12);
  const auto a = random_spd(rng, 3);
  CHECK(wirtinger_gradient_check(a, oracle::in_disk(rng, 1.0, 3), oracle::in_disk(rng, 1.0, 3), 1e-6) < 1e-6);
}

TEST_CASE("Gram matrices on 64 points stay positive semidefinite") {
  std::mt19937_64 rng(13);
  const auto pts = oracle::in_disk(rng, 0.95, 64);
  for (const auto& k : {KernelSpec::fock(), KernelSpec::rbf(), KernelSpec::mittag_leffler(0.5),
                        KernelSpec::touchard(2), KernelSpec::szego()}) {
    const auto r = eigen_range(gram_matrix(k, pts));
    CHECK(r.min >= -1e-10 * r.max);
  }
}
