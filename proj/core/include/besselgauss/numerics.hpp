#pragma once

#include <cstdint>
#include <span>

#include "besselgauss/polynomial.hpp"

namespace besselgauss {

/// Largest m or n for which coefficient growth still leaves double
/// precision meaningful.
inline constexpr int kOrderCap = 30;

/// Error function, absolute error below 1e-15. Odd by construction.
double erf(double x) noexcept;

/// Complementary error function.
double erfc(double x) noexcept;

/// erf in extended precision, for callers that subtract nearby values.
long double erf_extended(long double x) noexcept;
long double erfc_extended(long double x) noexcept;

/// k!! for k >= -1, with (-1)!! = 0!! = 1. Throws InvalidArgument for k < -1.
double double_factorial(int k);

/// k! as a double; exact (via 128-bit integers) for k <= 33.
double factorial(int k);

/// Binomial coefficient, exact in 64-bit arithmetic for n <= 62.
std::uint64_t binomial(int n, int k);

/// n!/(n-k)!, the falling factorial, as a double.
double falling_factorial(int n, int k);

/// Physicists' Hermite polynomial H_n via
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
Polynomial hermite(int n);

/// Scalar evaluation of H_n(x) by the same recurrence.
double hermite_value(int n, double x);

/// (1 - t^2)^n by binomial expansion. Throws InvalidArgument for n < 0 or
/// n > kOrderCap.
Polynomial one_minus_t2_pow(int n);

/// Spherical Bessel function of the first kind j_n(x).
///
/// Small |x| uses the power series; |x| < n uses Miller's downward
/// recurrence normalised by sum (2k+1) j_k^2 = 1; otherwise upward
/// recurrence from j_0, j_1. Negative x uses j_n(-x) = (-1)^n j_n(x).
double spherical_bessel_j(int n, double x);

/// Neumaier-compensated sum of the terms, accumulated in order of
/// increasing magnitude.
double compensated_sum(std::span<const double> terms);
long double compensated_sum(std::span<const long double> terms);

}  // namespace besselgauss
