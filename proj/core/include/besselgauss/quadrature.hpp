#pragma once

#include <functional>
#include <span>
#include <vector>

namespace besselgauss::quad {

struct Estimate {
  double value = 0.0;
  double abs_error = 0.0;
  double abs_integral = 0.0;  // integral of |f|, for roundoff floors
  long evaluations = 0;
};

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  /// Budget on the total number of panels, initial split included.
  int max_subdivisions = 2000;
  /// Initial panels are no wider than this.
  double max_panel_width = 0.0;
};

/// Globally adaptive Gauss-Kronrod 10/21 on [a, b]: the panel with the
/// largest error estimate is bisected until the summed estimate drops below
/// max(abs_tol, 50 eps * int|f|). Throws EvaluationError(NoConvergence) if
/// the subdivision budget runs out first.
Estimate adaptive_gk21(const std::function<double(double)>& f, double a, double b,
                       const AdaptiveOptions& opts);

/// Same, vector-valued: all components share the subdivision and the error
/// estimate is the max over components.
std::vector<Estimate> adaptive_gk21(
    const std::function<void(double, std::span<double>)>& f, std::size_t components,
    double a, double b, const AdaptiveOptions& opts);

/// n-point Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration
/// on P_n.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

/// Gauss-Legendre on [a, b] with order doubling from min_order until two
/// successive orders agree to abs_tol.
Estimate gauss_legendre_escalating(const std::function<double(double)>& f, double a,
                                   double b, double abs_tol, int min_order = 16,
                                   int max_order = 1024);

}  // namespace besselgauss::quad
