#pragma once

#include <vector>

#include "besselgauss/polynomial.hpp"

namespace besselgauss {

/// Smallest beta accepted. Below it the E_k(+-1) coefficients, which grow
/// like (2 beta^2)^{-k}, leave double range for orders near the cap.
inline constexpr double kMinBeta = 1e-3;

/// One instance of
///   I_mn(beta, q) = int e^{-beta^2 x^2 - i q x} x^{m+1/2} J_{n+1/2}(x) dx
/// over the real line.
struct EvalParams {
  int m = 0;
  int n = 0;
  double beta = 1.0;
  double q = 0.0;

  friend bool operator==(const EvalParams&, const EvalParams&) = default;
  friend auto operator<=>(const EvalParams&, const EvalParams&) = default;
};

/// Throws InvalidArgument for negative orders or a non-positive or
/// non-finite beta/q, and EvaluationError for beta < kMinBeta (overflow
/// guard) or m, n > kOrderCap.
void validate(const EvalParams& p);

struct ComplexValue {
  double re = 0.0;
  double im = 0.0;

  friend bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

double abs(const ComplexValue& z) noexcept;
ComplexValue conj(const ComplexValue& z) noexcept;
ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) noexcept;

/// Multiplies a real amplitude by (-i)^power, leaving the vanishing
/// component exactly +0.
ComplexValue apply_phase(double amplitude, int power) noexcept;

/// d^k/dt^k (1 - t^2)^n at t = +1 and t = -1 for k = n..2n; entry i
/// corresponds to k = n + i.
struct EndpointWeights {
  int n = 0;
  std::vector<double> values_at_plus1;
  std::vector<double> values_at_minus1;

  /// Weight for any k >= 0; zero outside n..2n.
  double at_plus1(int k) const noexcept;
  double at_minus1(int k) const noexcept;
};

/// E_n(t) with d^n/dt^n e^{-(q-t)^2/4beta^2} = E_n(t) e^{-(q-t)^2/4beta^2},
/// built from E_n = [(q - t) E_{n-1} - (n - 1) E_{n-2}] / (2 beta^2).
Polynomial e_poly(int n, const EvalParams& p);

/// E_n(t) evaluated pointwise with the same recursion.
double e_value(int n, double t, const EvalParams& p);

/// Exact endpoint derivatives from the Leibniz rule on (1-t)^n (1+t)^n:
///   at +1: (-1)^n k! n! 2^{2n-k} / ((k-n)! (2n-k)!),  at -1: (-1)^k times that.
EndpointWeights endpoint_weights(int n);

/// Gaussian moments over the substituted interval
///   [lo, hi] = [-(q+1)/(2 beta), (1-q)/(2 beta)],
/// which is the image of t in [-1, 1] under t = q + 2 beta v.
///
/// even: int_lo^hi v^{2s} e^{-v^2} dv  (erf term plus boundary sum)
/// odd:  int_lo^hi v^{2s+1} e^{-v^2} dv (boundary sum only)
///
/// Boundary exponentials are formed as e^{-(q-1)^2/4beta^2} and
/// e^{-(q+1)^2/4beta^2} directly. Throws EvaluationError on overflow.
double gaussian_moment_even(int s, const EvalParams& p);
double gaussian_moment_odd(int s, const EvalParams& p);

/// int_{-1}^{1} e^{-(q-t)^2/4beta^2} d^r/dt^r (1-t^2)^n dt with r = m+n+1,
/// expanded over the Gaussian moments. Only meaningful (non-zero) for m < n.
double residual_integral(const EvalParams& p);

/// Real amplitude A with I_mn = A (-i)^{m+n+1}.
double closed_amplitude(const EvalParams& p);

/// I_mn(beta, q) in closed form: boundary sum over the endpoint weights for
/// m >= n, plus the residual integral term for m < n.
ComplexValue eval_closed(const EvalParams& p);

}  // namespace besselgauss
