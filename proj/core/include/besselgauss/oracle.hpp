#pragma once

#include <optional>
#include <string>

#include "besselgauss/closed_form.hpp"

namespace besselgauss {

struct QuadratureResult {
  ComplexValue value;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

struct QuadratureOptions {
  double tol = 1e-12;
  int max_subdivisions = 4000;
};

/// Adaptive quadrature of sqrt(2/pi) x^{m+1} j_n(x) e^{-beta^2 x^2}
/// (cos qx - i sin qx) over [-X, X], with X chosen so the neglected tail is
/// below tol/10.
QuadratureResult eval_quadrature_direct(const EvalParams& p, const QuadratureOptions& opts);
QuadratureResult eval_quadrature_direct(const EvalParams& p, double tol);

/// Truncation point used by eval_quadrature_direct.
double direct_truncation(const EvalParams& p, double tol);

/// The t-integral form
///   I = 1/(beta (2 i beta)^N 2^{n+1/2} n!)
///       int_{-1}^{1} (1-t^2)^n e^{-(q-t)^2/4beta^2} H_N((q-t)/2beta) dt,
/// N = m+n+1, by Gauss-Legendre with order escalation.
QuadratureResult eval_quadrature_hermite(const EvalParams& p, double tol);

/// int (i x)^n e^{-beta^2 x^2 - i q x} dx
///   = sqrt(pi) / (2^n beta^{n+1}) e^{-q^2/4beta^2} H_n(q/2beta).
ComplexValue gauss_hermite_fourier(int n, double beta, double q);

/// max |a-b| / (1 + max(|a|, |b|)).
double relative_disagreement(const ComplexValue& a, const ComplexValue& b) noexcept;

struct ComparisonReport {
  EvalParams params;
  ComplexValue closed;
  QuadratureResult quad_direct;
  QuadratureResult quad_hermite;
  double max_rel_disagreement = 0.0;
  bool pass = false;
  /// Set when a path threw; names the path and the reason.
  std::optional<std::string> error;
  std::optional<std::string> error_code;
};

/// Runs all three evaluations and records the worst pairwise disagreement.
/// Never throws for evaluation failures; they are recorded in `error`.
ComparisonReport compare(const EvalParams& p, double tol, int max_subdivisions = 4000);

}  // namespace besselgauss
