#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rkhs/superosc.hpp"

namespace rkhs {

// Output data w_k for which a superoscillatory kernel expansion is the exact
// ridge minimizer, with centers z_k = -i h_k. Functions suffixed _printed
// transcribe the published formulas literally; _resolved variants carry the
// corrected identity.

/// w_k = sum_j Z_j e^{h_j h_k} + lambda Z_k.
ComplexVector fock_outputs_general(const SuperoscParams& params, double lambda,
                                   Precision precision = Precision::binary64);

/// Binomial closed form of fock_outputs_general for classical parameters.
ComplexVector fock_outputs_classical(int n, double a, double lambda);

/// w_k = e^{h_k^2/2} sum_j Z_j e^{-h_k h_j} + lambda Z_k e^{-h_k^2/2}.
ComplexVector rbf_outputs_first_printed(const SuperoscParams& params, double lambda);
/// w_k = e^{h_k^2/2} sum_j Z_j e^{h_j^2/2 - h_k h_j} + lambda Z_k.
ComplexVector rbf_outputs_second_printed(const SuperoscParams& params, double lambda);

/// Same with e^{+h_k h_j}, which is what K_{sqrt2}(-i h_k, -i h_j) = e^{(h_k+h_j)^2/2} gives.
ComplexVector rbf_outputs_first_resolved(const SuperoscParams& params, double lambda,
                                         Precision precision = Precision::binary64);
ComplexVector rbf_outputs_second_resolved(const SuperoscParams& params, double lambda,
                                          Precision precision = Precision::binary64);

ComplexVector rbf_outputs_classical_first_printed(int n, double a, double lambda);
ComplexVector rbf_outputs_classical_second_printed(int n, double a, double lambda);

/// ((1+a)/2)^n [e^{h_k^2/2 + h_k} (1 + x)^n + lambda binom(n,k) r^k e^{-h_k^2/2}],
/// r = (1-a)/(1+a), x = r e^{-2 h_k / n}.
ComplexVector rbf_outputs_classical_first_resolved(int n, double a, double lambda);
/// No binomial collapse exists for the second type (the j^2 term in the
/// exponent); evaluated as rbf_outputs_second_resolved in extended precision.
ComplexVector rbf_outputs_classical_second_resolved(int n, double a, double lambda);

/// w_k = lambda Z_k + sum_j Z_j E_q(-i h_k, -i h_j).
ComplexVector ml_outputs(const SuperoscParams& params, double q, double lambda,
                         Precision precision = Precision::binary64);
/// w_k = lambda Z_k + sum_j Z_j K_p(-i h_k, -i h_j).
/// With Precision::extended both regroup the double sum by moments,
/// sum_m c_m h_k^m sum_j Z_j h_j^m, at 100 digits.
ComplexVector touchard_outputs(const SuperoscParams& params, int p, double lambda,
                               Precision precision = Precision::binary64);

/// Classical p = 1 closed form with the bracket [1 - x] of the z_k^2 term.
ComplexVector touchard_outputs_p1_closed_printed(int n, double a, double lambda);
/// Same with [(1 - x)^2 + 4x/n], the value of sum_j binom(n,j)(1-2j/n)^2 x^j / (1+x)^{n-2}.
ComplexVector touchard_outputs_p1_closed_resolved(int n, double a, double lambda);

/// sum_j binom(n,j) j x^j = n x (1+x)^{n-1}.
Complex binomial_moment1(int n, Complex x);
/// sum_j binom(n,j) j^2 x^j = n x (1+x)^{n-2} (1 + n x).
Complex binomial_moment2(int n, Complex x);

/// (K + lambda I) alpha for the family's expansion, summed in extended precision.
ComplexVector oracle_outputs(const SuperFamily& family, const SuperoscParams& params,
                             double lambda);

struct FormulaComparison {
  ComplexVector w_formula;
  double max_rel_err = 0.0;
  bool match = false;
};

struct OutputFormulaReport {
  std::string family;
  int n = 0;
  double a = 0.0;
  double lambda = 0.0;
  ComplexVector w_formula;
  ComplexVector w_oracle;
  double max_rel_err = 0.0;
  bool match = false;
  double tolerance = 0.0;
  std::optional<FormulaComparison> resolved;
  std::string note;
};

/// max_k |w_formula - w_oracle| / max(1, |w_oracle|) and its verdict.
OutputFormulaReport compare_outputs(std::string family, int n, double a, double lambda,
                                    ComplexVector w_formula, ComplexVector w_oracle,
                                    double tolerance);

void attach_resolved(OutputFormulaReport& report, ComplexVector w_resolved);

}  // namespace rkhs
