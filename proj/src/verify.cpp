#include "rkhs/verify.hpp"

#include <algorithm>
#include <random>

#include "rkhs/blaschke.hpp"

namespace rkhs {

namespace {

constexpr double kFormulaTol = 1e-9;
constexpr double kKernelSumTol = 1e-12;
constexpr double kBlaschkeTol = 1e-10;
constexpr std::size_t kMaxBlaschkeRoots = 10;

Precision choose_precision(const VerifyConfig& c, const SuperoscParams& params) {
  if (c.precision == "binary64") return Precision::binary64;
  if (c.precision == "extended") return Precision::extended;
  if (c.precision != "auto") fail(ErrorKind::input, "precision must be auto, binary64 or extended");
  double total = 0.0;
  for (const auto& z : params.coefficients) total += std::abs(z);
  return total > 1e4 ? Precision::extended : Precision::binary64;
}

const char* precision_name(Precision p) { return p == Precision::extended ? "extended" : "binary64"; }

OutputFormulaReport verify_one(const std::string& family, const VerifyConfig& c) {
  const SuperoscParams params = classical_params(c.n, c.a);
  const Precision prec = choose_precision(c, params);
  const std::string sums = std::string("sums in ") + precision_name(prec);

  if (family == "fock-general") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda, fock_outputs_general(params, c.lambda, prec),
                             oracle_outputs(SuperFamily::fock(), params, c.lambda), kFormulaTol);
    r.note = sums;
    return r;
  }
  if (family == "fock-classical") {
    return compare_outputs(family, c.n, c.a, c.lambda, fock_outputs_classical(c.n, c.a, c.lambda),
                           oracle_outputs(SuperFamily::fock(), params, c.lambda), kFormulaTol);
  }
  if (family == "rbf-first") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda, rbf_outputs_first_printed(params, c.lambda),
                             oracle_outputs(SuperFamily::rbf_first(), params, c.lambda), kFormulaTol);
    attach_resolved(r, rbf_outputs_first_resolved(params, c.lambda, prec));
    r.note = "printed formula uses e^{-h_k h_j}; resolved uses e^{+h_k h_j}; " + sums;
    return r;
  }
  if (family == "rbf-second") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda, rbf_outputs_second_printed(params, c.lambda),
                             oracle_outputs(SuperFamily::rbf_second(), params, c.lambda), kFormulaTol);
    attach_resolved(r, rbf_outputs_second_resolved(params, c.lambda, prec));
    r.note = "printed formula uses e^{-h_k h_j}; resolved uses e^{+h_k h_j}; " + sums;
    return r;
  }
  if (family == "rbf-classical-first") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda,
                             rbf_outputs_classical_first_printed(c.n, c.a, c.lambda),
                             oracle_outputs(SuperFamily::rbf_first(), params, c.lambda), kFormulaTol);
    attach_resolved(r, rbf_outputs_classical_first_resolved(c.n, c.a, c.lambda));
    r.note = "resolved: ((1+a)/2)^n [e^{h_k^2/2+h_k} (1+x)^n + lambda binom(n,k) r^k e^{-h_k^2/2}], "
             "r=(1-a)/(1+a), x=r e^{-2h_k/n}";
    return r;
  }
  if (family == "rbf-classical-second") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda,
                             rbf_outputs_classical_second_printed(c.n, c.a, c.lambda),
                             oracle_outputs(SuperFamily::rbf_second(), params, c.lambda), kFormulaTol);
    attach_resolved(r, rbf_outputs_classical_second_resolved(c.n, c.a, c.lambda));
    r.note = "resolved: e^{h_k^2/2} sum_j C_j e^{h_j^2/2+h_k h_j} + lambda C_k, summed in extended precision";
    return r;
  }
  if (family == "ml") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda, ml_outputs(params, c.q, c.lambda, prec),
                             oracle_outputs(SuperFamily::mittag_leffler(c.q), params, c.lambda),
                             kKernelSumTol);
    r.note = "q=" + std::to_string(c.q) + "; " + sums;
    return r;
  }
  if (family == "touchard") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda, touchard_outputs(params, c.p, c.lambda, prec),
                             oracle_outputs(SuperFamily::touchard(c.p), params, c.lambda),
                             kKernelSumTol);
    r.note = "p=" + std::to_string(c.p) + "; " + sums;
    return r;
  }
  if (family == "touchard-p1") {
    auto r = compare_outputs(family, c.n, c.a, c.lambda,
                             touchard_outputs_p1_closed_printed(c.n, c.a, c.lambda),
                             oracle_outputs(SuperFamily::touchard(1), params, c.lambda), kFormulaTol);
    attach_resolved(r, touchard_outputs_p1_closed_resolved(c.n, c.a, c.lambda));
    r.note = "printed z_k^2 bracket is [1-x]; resolved bracket is [(1-x)^2 + 4x/n]";
    return r;
  }
  if (family == "blaschke") {
    std::mt19937_64 rng(c.seed);
    const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(c.n), kMaxBlaschkeRoots);
    const BlaschkeProduct b = random_blaschke(rng, count);
    auto r = compare_outputs(family, static_cast<int>(count), c.a, c.lambda,
                             blaschke_outputs(b, c.lambda), blaschke_oracle_outputs(b, c.lambda),
                             kBlaschkeTol);
    r.note = std::to_string(count) + " random roots, seed " + std::to_string(c.seed);
    return r;
  }
  fail(ErrorKind::input, "unknown verification family '" + family + "'");
}

}  // namespace

const std::vector<std::string>& verify_families() {
  static const std::vector<std::string> names = {
      "fock-general", "fock-classical",  "rbf-first",   "rbf-second", "rbf-classical-first",
      "rbf-classical-second", "ml", "touchard", "touchard-p1", "blaschke"};
  return names;
}

std::vector<OutputFormulaReport> run_verification(const VerifyConfig& config) {
  if (config.n < 1) fail(ErrorKind::input, "n must be at least 1");
  std::vector<OutputFormulaReport> out;
  if (config.family == "all") {
    for (const auto& f : verify_families()) out.push_back(verify_one(f, config));
  } else {
    out.push_back(verify_one(config.family, config));
  }
  return out;
}

}  // namespace rkhs
