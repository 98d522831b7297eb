#include "besselgauss/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "besselgauss/errors.hpp"
#include "besselgauss/numerics.hpp"

namespace besselgauss {

using ld = long double;

void validate(const EvalParams& p) {
  if (p.m < 0 || p.n < 0) throw InvalidArgument("m and n must be non-negative");
  if (!std::isfinite(p.beta) || p.beta <= 0.0) throw InvalidArgument("beta must be positive");
  if (!std::isfinite(p.q)) throw InvalidArgument("q must be finite");
  if (p.beta < kMinBeta)
    throw EvaluationError(EvaluationError::Reason::Overflow,
                          "beta below 1e-3 trips the overflow guard");
  if (p.m > kOrderCap || p.n > kOrderCap)
    throw EvaluationError(EvaluationError::Reason::CapExceeded,
                          "m and n must not exceed " + std::to_string(kOrderCap));
}

double abs(const ComplexValue& z) noexcept { return std::hypot(z.re, z.im); }

ComplexValue conj(const ComplexValue& z) noexcept { return {z.re, -z.im}; }

ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) noexcept {
  return {a.re - b.re, a.im - b.im};
}

ComplexValue apply_phase(double amplitude, int power) noexcept {
  const double a = amplitude + 0.0;  // -0 -> +0
  switch (((power % 4) + 4) % 4) {
    case 0: return {a, 0.0};
    case 1: return {0.0, -a + 0.0};
    case 2: return {-a + 0.0, 0.0};
    default: return {0.0, a};
  }
}

double EndpointWeights::at_plus1(int k) const noexcept {
  if (k < n || k > 2 * n) return 0.0;
  return values_at_plus1[static_cast<std::size_t>(k - n)];
}

double EndpointWeights::at_minus1(int k) const noexcept {
  if (k < n || k > 2 * n) return 0.0;
  return values_at_minus1[static_cast<std::size_t>(k - n)];
}

Polynomial e_poly(int n, const EvalParams& p) {
  if (n < 0) throw InvalidArgument("e_poly: n must be non-negative");
  const double inv = 1.0 / (2.0 * p.beta * p.beta);
  const Polynomial q_minus_t{p.q, -1.0};
  Polynomial prev;         // E_{k-2}
  Polynomial cur{1.0};     // E_{k-1}
  for (int k = 1; k <= n; ++k) {
    Polynomial next = q_minus_t * cur;
    if (k >= 2) next += prev * (-(k - 1.0));
    next *= inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

ld e_value_ld(int n, ld t, const EvalParams& p) {
  const ld inv = 1.0L / (2.0L * p.beta * p.beta);
  const ld u = static_cast<ld>(p.q) - t;
  if (n == 0) return 1.0L;
  ld e0 = 1.0L;
  ld e1 = u * inv;
  for (int k = 2; k <= n; ++k) {
    const ld e2 = (u * e1 - (k - 1) * e0) * inv;
    e0 = e1;
    e1 = e2;
  }
  return e1;
}

struct MomentSetup {
  ld a;   // (q-1)/(2 beta): the substituted interval is [-b, -a]
  ld b;   // (q+1)/(2 beta)
  ld ga;  // e^{-a^2} = e^{-(q-1)^2/4beta^2}
  ld gb;  // e^{-b^2}
};

MomentSetup moment_setup(const EvalParams& p) {
  const ld two_beta = 2.0L * p.beta;
  const ld a = (static_cast<ld>(p.q) - 1.0L) / two_beta;
  const ld b = (static_cast<ld>(p.q) + 1.0L) / two_beta;
  return {a, b, std::exp(-a * a), std::exp(-b * b)};
}

double checked(ld v, const char* what) {
  const double d = static_cast<double>(v);
  if (!std::isfinite(d))
    throw EvaluationError(EvaluationError::Reason::Overflow,
                          std::string(what) + " left double range");
  return d;
}

// erf(b) - erf(a), through the complement when both arguments share a sign.
ld erf_difference(ld a, ld b) {
  if (a > 0.0L && b > 0.0L) return erfc_extended(a) - erfc_extended(b);
  if (a < 0.0L && b < 0.0L) return erfc_extended(-b) - erfc_extended(-a);
  return erf_extended(b) - erf_extended(a);
}

ld moment_even_ld(int s, const MomentSetup& ms) {
  if (ms.a == ms.b) return 0.0L;
  const ld dfac = double_factorial(2 * s - 1);
  const ld erf_diff = erf_difference(ms.a, ms.b);
  std::vector<ld> terms;
  terms.push_back(std::sqrt(std::numbers::pi_v<ld>) * dfac / std::pow(2.0L, s + 1) * erf_diff);
  for (int k = 0; k < s; ++k) {
    const int e = 2 * s - 2 * k - 1;
    const ld c = dfac / double_factorial(e) / std::pow(2.0L, k) / 2.0L;
    terms.push_back(c * ms.ga * std::pow(ms.a, e));
    terms.push_back(-c * ms.gb * std::pow(ms.b, e));
  }
  return compensated_sum(std::span<const ld>(terms));
}

ld moment_odd_ld(int s, const MomentSetup& ms) {
  if (ms.a == ms.b) return 0.0L;
  std::vector<ld> terms;
  for (int k = 0; k <= s; ++k) {
    const int e = 2 * s - 2 * k;
    const ld c = falling_factorial(s, k) / 2.0L;
    terms.push_back(-c * ms.ga * std::pow(ms.a, e));
    terms.push_back(c * ms.gb * std::pow(ms.b, e));
  }
  return compensated_sum(std::span<const ld>(terms));
}

ld residual_ld(const EvalParams& p) {
  const int r = p.m + p.n + 1;
  const int n = p.n;
  const int first = (r + 1) / 2;
  if (first > n) return 0.0L;

  const MomentSetup ms = moment_setup(p);
  const int max_power = 2 * n - r;
  std::vector<ld> moments(static_cast<std::size_t>(max_power + 1));
  for (int s = 0; s <= max_power; ++s)
    moments[static_cast<std::size_t>(s)] =
        (s % 2 == 0) ? moment_even_ld(s / 2, ms) : moment_odd_ld(s / 2, ms);

  const ld two_beta = 2.0L * p.beta;
  const ld q = p.q;
  std::vector<ld> terms;
  for (int k = first; k <= n; ++k) {
    const int j = 2 * k - r;
    ld c = static_cast<ld>(binomial(n, k)) * falling_factorial(2 * k, r);
    if (k % 2 != 0) c = -c;
    // t^j = (q + 2 beta v)^j, expanded without dividing by q.
    for (int s = 0; s <= j; ++s) {
      const ld coef = c * static_cast<ld>(binomial(j, s)) * std::pow(two_beta, s) *
                      std::pow(q, j - s);
      terms.push_back(coef * moments[static_cast<std::size_t>(s)]);
    }
  }
  return two_beta * compensated_sum(std::span<const ld>(terms));
}

}  // namespace

double e_value(int n, double t, const EvalParams& p) {
  if (n < 0) throw InvalidArgument("e_value: n must be non-negative");
  return static_cast<double>(e_value_ld(n, t, p));
}

EndpointWeights endpoint_weights(int n) {
  if (n < 0 || n > kOrderCap)
    throw InvalidArgument("endpoint_weights: n must be in [0, " + std::to_string(kOrderCap) + "]");
  EndpointWeights w;
  w.n = n;
  for (int k = n; k <= 2 * n; ++k) {
    // k!/(k-n)! * n!/(2n-k)! * 2^{2n-k}, each factor an exact integer.
    double v = falling_factorial(k, n) * falling_factorial(n, k - n) * std::ldexp(1.0, 2 * n - k);
    if (n % 2 != 0) v = -v;
    w.values_at_plus1.push_back(v);
    w.values_at_minus1.push_back(k % 2 == 0 ? v : -v);
  }
  return w;
}

double gaussian_moment_even(int s, const EvalParams& p) {
  if (s < 0) throw InvalidArgument("gaussian_moment_even: s must be non-negative");
  return checked(moment_even_ld(s, moment_setup(p)), "even Gaussian moment");
}

double gaussian_moment_odd(int s, const EvalParams& p) {
  if (s < 0) throw InvalidArgument("gaussian_moment_odd: s must be non-negative");
  return checked(moment_odd_ld(s, moment_setup(p)), "odd Gaussian moment");
}

double residual_integral(const EvalParams& p) {
  return checked(residual_ld(p), "residual integral");
}

double closed_amplitude(const EvalParams& p) {
  validate(p);
  const int big_n = p.m + p.n + 1;
  const EndpointWeights w = endpoint_weights(p.n);
  const ld four_beta2 = 4.0L * p.beta * p.beta;
  const ld qm = static_cast<ld>(p.q) - 1.0L;
  const ld qp = static_cast<ld>(p.q) + 1.0L;
  const ld g_plus = std::exp(-qm * qm / four_beta2);   // e^{-(q-t)^2/4beta^2} at t = +1
  const ld g_minus = std::exp(-qp * qp / four_beta2);  // ... at t = -1

  // Integration by parts of int P(t) g^{(N)}(t) dt, P = (1-t^2)^n:
  // sum_k (-1)^k [P^{(k)} g^{(N-1-k)}]_{-1}^{1}; P^{(k)}(+-1) vanishes for k < n
  // and P^{(k)} itself vanishes for k > 2n.
  std::vector<ld> terms;
  const int last = std::min(2 * p.n, big_n - 1);
  for (int k = p.n; k <= last; ++k) {
    const int e_order = big_n - 1 - k;
    const ld sign = (k % 2 == 0) ? 1.0L : -1.0L;
    terms.push_back(sign * w.at_plus1(k) * e_value_ld(e_order, 1.0L, p) * g_plus);
    terms.push_back(-sign * w.at_minus1(k) * e_value_ld(e_order, -1.0L, p) * g_minus);
  }
  if (p.m < p.n) {
    const ld residual = residual_ld(p);
    terms.push_back((big_n % 2 == 0) ? residual : -residual);
  }
  const ld sum = compensated_sum(std::span<const ld>(terms));
  const ld scale = static_cast<ld>(p.beta) * std::pow(2.0L, p.n + 0.5L) *
                   static_cast<ld>(factorial(p.n));
  return checked(sum / scale, "closed-form amplitude");
}

ComplexValue eval_closed(const EvalParams& p) {
  return apply_phase(closed_amplitude(p), p.m + p.n + 1);
}

}  // namespace besselgauss
