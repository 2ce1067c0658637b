#include <doctest.h>

#include "oracles.hpp"
#include "rkhs/closed_forms.hpp"
#include "rkhs/verify.hpp"

using namespace rkhs;

TEST_CASE("binomial moment identities") {
  CHECK(binomial_moment2(3, 1.0) == Complex(24.0));
  for (int n : {1, 2, 5, 13}) {
    for (const Complex x : {Complex(1.0), Complex(-0.3), Complex(0.2, 0.7)}) {
      CHECK(std::abs(binomial_moment1(n, x) - oracle::binomial_moment(n, 1, x)) <
            1e-12 * std::max(1.0, std::abs(oracle::binomial_moment(n, 1, x))));
      if (n >= 2)
        CHECK(std::abs(binomial_moment2(n, x) - oracle::binomial_moment(n, 2, x)) <
              1e-12 * std::max(1.0, std::abs(oracle::binomial_moment(n, 2, x))));
    }
  }
}

TEST_CASE("Fock classical closed form against the matrix oracle") {
  for (int n : {1, 2, 10, 50, 100, 300}) {
    const auto w = fock_outputs_classical(n, 2.0, 1.0);
    const auto o = oracle_outputs(SuperFamily::fock(), classical_params(n, 2.0), 1.0);
    CHECK_MESSAGE(max_rel_err(w, o) < 1e-9, "n=" << n);
  }
  // a = 1 collapses to h_0 only
  const auto w = fock_outputs_classical(4, 1.0, 0.5);
  CHECK(std::abs(w[0] - (std::exp(1.0) + 0.5)) < 1e-14);
  CHECK(std::abs(w[2] - std::exp(0.0)) < 1e-14);
}

TEST_CASE("Fock general formula on custom parameters") {
  const auto p = SuperoscParams::custom(3.0, {0.9, -0.1, 0.4}, {1.0, Complex(0.5, -2.0), -0.7});
  CHECK(max_rel_err(fock_outputs_general(p, 0.8), oracle_outputs(SuperFamily::fock(), p, 0.8)) < 1e-14);
}

TEST_CASE("RBF resolved forms match the oracle; printed forms do not") {
  for (int n : {3, 10, 40}) {
    const auto p = classical_params(n, 2.0);
    const auto o1 = oracle_outputs(SuperFamily::rbf_first(), p, 1.0);
    const auto o2 = oracle_outputs(SuperFamily::rbf_second(), p, 1.0);
    CHECK(max_rel_err(rbf_outputs_classical_first_resolved(n, 2.0, 1.0), o1) < 1e-9);
    CHECK(max_rel_err(rbf_outputs_classical_second_resolved(n, 2.0, 1.0), o2) < 1e-9);
    CHECK(max_rel_err(rbf_outputs_first_resolved(p, 1.0, Precision::extended), o1) < 1e-9);
    CHECK(max_rel_err(rbf_outputs_second_resolved(p, 1.0, Precision::extended), o2) < 1e-9);
    CHECK(max_rel_err(rbf_outputs_first_printed(p, 1.0), o1) > 1e-3);
    CHECK(max_rel_err(rbf_outputs_second_printed(p, 1.0), o2) > 1e-3);
  }
}

TEST_CASE("Mittag-Leffler and Touchard outputs") {
  for (int n : {4, 10}) {
    const auto p = classical_params(n, 2.0);
    for (double q : {0.5, 2.0})
      CHECK(max_rel_err(ml_outputs(p, q, 1.0), oracle_outputs(SuperFamily::mittag_leffler(q), p, 1.0)) <
            1e-12);
    for (int pp : {1, 2})
      CHECK(max_rel_err(touchard_outputs(p, pp, 1.0), oracle_outputs(SuperFamily::touchard(pp), p, 1.0)) <
            1e-12);
  }
  for (int n : {30, 80}) {
    const auto p = classical_params(n, 2.0);
    CHECK(max_rel_err(ml_outputs(p, 0.5, 1.0, Precision::extended),
                      oracle_outputs(SuperFamily::mittag_leffler(0.5), p, 1.0)) < 1e-12);
    CHECK(max_rel_err(touchard_outputs(p, 2, 1.0, Precision::extended),
                      oracle_outputs(SuperFamily::touchard(2), p, 1.0)) < 1e-12);
  }
}

TEST_CASE("Touchard p = 1 closed form") {
  for (int n : {2, 10, 100}) {
    const auto o = oracle_outputs(SuperFamily::touchard(1), classical_params(n, 2.0), 1.0);
    CHECK(max_rel_err(touchard_outputs_p1_closed_resolved(n, 2.0, 1.0), o) < 1e-9);
    CHECK(max_rel_err(touchard_outputs_p1_closed_printed(n, 2.0, 1.0), o) > 1e-3);
  }
  CHECK_THROWS_AS(touchard_outputs_p1_closed_resolved(5, 1.0, 1.0), Error);
}

TEST_CASE("verification report verdicts") {
  VerifyConfig c;
  const auto reports = run_verification(c);
  REQUIRE(reports.size() == verify_families().size());
  for (const auto& r : reports) {
    INFO(r.family);
    CHECK((r.match || (r.resolved && r.resolved->match)));
    if (r.family == "fock-general" || r.family == "fock-classical" || r.family == "ml" ||
        r.family == "touchard" || r.family == "blaschke")
      CHECK(r.match);
  }
  c.family = "nope";
  CHECK_THROWS_AS(run_verification(c), Error);
}
