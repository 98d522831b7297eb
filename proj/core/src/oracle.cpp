#include "besselgauss/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "besselgauss/errors.hpp"
#include "besselgauss/numerics.hpp"
#include "besselgauss/quadrature.hpp"

namespace besselgauss {

double direct_truncation(const EvalParams& p, double tol) {
  constexpr double kLogMargin = 10.0;
  const double target = std::log(1.0 / tol) + kLogMargin;
  const double growth = p.m + p.n + 1;
  const double b2 = p.beta * p.beta;
  // Fixed point of X = sqrt((target + growth ln X) / beta^2); monotone from
  // below once X >= 1.
  double x = std::max(1.0, std::sqrt(target / b2));
  for (int i = 0; i < 100; ++i) {
    const double next = std::sqrt((target + growth * std::log(x)) / b2);
    if (std::abs(next - x) < 1e-12 * x) break;
    x = std::max(1.0, next);
  }
  return x;
}

QuadratureResult eval_quadrature_direct(const EvalParams& p, const QuadratureOptions& opts) {
  validate(p);
  if (!(opts.tol > 0.0)) throw InvalidArgument("tol must be positive");
  const double limit = direct_truncation(p, opts.tol);
  const double norm = std::sqrt(2.0 / std::numbers::pi);
  const double b2 = p.beta * p.beta;
  const auto integrand = [&](double x, std::span<double> out) {
    const double w =
        norm * std::pow(x, p.m + 1) * spherical_bessel_j(p.n, x) * std::exp(-b2 * x * x);
    out[0] = w * std::cos(p.q * x);
    out[1] = -w * std::sin(p.q * x);
  };
  quad::AdaptiveOptions qo;
  qo.abs_tol = opts.tol * 0.9;
  qo.max_subdivisions = opts.max_subdivisions;
  qo.max_panel_width = std::numbers::pi / (4.0 * std::max(1.0, std::abs(p.q)));
  const auto est = quad::adaptive_gk21(integrand, 2, -limit, limit, qo);

  QuadratureResult r;
  r.value = {est[0].value + 0.0, est[1].value + 0.0};
  r.abs_error_estimate = std::max(est[0].abs_error, est[1].abs_error) + opts.tol / 10.0;
  r.evaluations = est[0].evaluations;
  return r;
}

QuadratureResult eval_quadrature_direct(const EvalParams& p, double tol) {
  return eval_quadrature_direct(p, QuadratureOptions{tol, 4000});
}

QuadratureResult eval_quadrature_hermite(const EvalParams& p, double tol) {
  validate(p);
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
  const int big_n = p.m + p.n + 1;
  const double two_beta = 2.0 * p.beta;
  const double prefactor = 1.0 / (p.beta * std::pow(two_beta, big_n) *
                                  std::pow(2.0, p.n + 0.5) * factorial(p.n));
  const double four_beta2 = two_beta * two_beta;
  const auto integrand = [&](double t) {
    const double u = p.q - t;
    return std::pow(1.0 - t * t, p.n) * std::exp(-u * u / four_beta2) *
           hermite_value(big_n, u / two_beta);
  };
  const auto est = quad::gauss_legendre_escalating(integrand, -1.0, 1.0, tol / prefactor);

  QuadratureResult r;
  r.value = apply_phase(prefactor * est.value, big_n);
  r.abs_error_estimate = prefactor * est.abs_error;
  r.evaluations = est.evaluations;
  return r;
}

ComplexValue gauss_hermite_fourier(int n, double beta, double q) {
  if (n < 0 || n > kOrderCap) throw InvalidArgument("gauss_hermite_fourier: n out of range");
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  const double u = q / (2.0 * beta);
  const double v = std::sqrt(std::numbers::pi) / (std::ldexp(1.0, n) * std::pow(beta, n + 1)) *
                   std::exp(-u * u) * hermite_value(n, u);
  return {v, 0.0};
}

double relative_disagreement(const ComplexValue& a, const ComplexValue& b) noexcept {
  return abs(a - b) / (1.0 + std::max(abs(a), abs(b)));
}

ComparisonReport compare(const EvalParams& p, double tol, int max_subdivisions) {
  ComparisonReport report;
  report.params = p;
  const double quad_tol = std::max(tol * 1e-3, 1e-14);
  const char* path = "closed";
  try {
    if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
    report.closed = eval_closed(p);
    path = "quad-direct";
    report.quad_direct = eval_quadrature_direct(p, QuadratureOptions{quad_tol, max_subdivisions});
    path = "quad-hermite";
    report.quad_hermite = eval_quadrature_hermite(p, quad_tol);
  } catch (const EvaluationError& e) {
    report.error = std::string(path) + ": " + e.what();
    report.error_code = to_string(e.reason());
    return report;
  } catch (const InvalidArgument& e) {
    report.error = std::string(path) + ": " + e.what();
    report.error_code = "invalid";
    return report;
  }
  report.max_rel_disagreement =
      std::max({relative_disagreement(report.closed, report.quad_direct.value),
                relative_disagreement(report.closed, report.quad_hermite.value),
                relative_disagreement(report.quad_direct.value, report.quad_hermite.value)});
  report.pass = report.max_rel_disagreement <= tol;
  return report;
}

}  // namespace besselgauss
