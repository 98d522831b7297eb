#include "besselgauss/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "besselgauss/errors.hpp"

namespace besselgauss {

namespace {

constexpr double kSeriesLimit = 3.0;

// erf(x) = 2x/sqrt(pi) e^{-x^2} sum_k (2x^2)^k / (2k+1)!!. Every term is
// positive, so there is no cancellation for |x| <= kSeriesLimit.
long double erf_series(long double x) {
  const long double two_x2 = 2.0L * x * x;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 300; ++k) {
    term *= two_x2 / (2.0L * k + 1.0L);
    sum += term;
    if (term < 1e-21L * sum) break;
  }
  return 2.0L * x * std::numbers::inv_sqrtpi_v<long double> * std::exp(-x * x) * sum;
}

// erfc for x > kSeriesLimit, continued fraction
//   sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
long double erfc_continued_fraction(long double x) {
  constexpr long double tiny = 1e-300L;
  long double f = x;
  long double c = x;
  long double d = 0.0L;
  for (int k = 1; k < 1000; ++k) {
    const long double a = 0.5L * k;
    d = x + a * d;
    if (d == 0.0L) d = tiny;
    c = x + a / c;
    if (c == 0.0L) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0L) < 1e-20L) break;
  }
  return std::exp(-x * x) * std::numbers::inv_sqrtpi_v<long double> / f;
}

__extension__ using u128 = unsigned __int128;

}  // namespace

long double erf_extended(long double x) noexcept {
  const long double ax = std::abs(x);
  long double r;
  if (ax <= kSeriesLimit) {
    r = erf_series(ax);
  } else if (ax >= 7.0L) {
    r = 1.0L;
  } else {
    r = 1.0L - erfc_continued_fraction(ax);
  }
  r = std::min(r, 1.0L);
  return x < 0.0L ? -r : r;
}

long double erfc_extended(long double x) noexcept {
  if (x > kSeriesLimit) return erfc_continued_fraction(x);
  if (x < -kSeriesLimit) return 2.0L - erfc_continued_fraction(-x);
  return 1.0L - erf_extended(x);
}

double erf(double x) noexcept { return static_cast<double>(erf_extended(x)); }

double erfc(double x) noexcept { return static_cast<double>(erfc_extended(x)); }

double double_factorial(int k) {
  if (k < -1) throw InvalidArgument("double_factorial: k must be >= -1, got " + std::to_string(k));
  double r = 1.0;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

double factorial(int k) {
  if (k < 0) throw InvalidArgument("factorial: k must be non-negative");
  if (k <= 33) {
    u128 r = 1;
    for (int i = 2; i <= k; ++i) r *= static_cast<u128>(i);
    return static_cast<double>(r);
  }
  double r = factorial(33);
  for (int i = 34; i <= k; ++i) r *= i;
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 62) throw InvalidArgument("binomial: n above 62 is not exact in 64 bits");
  k = std::min(k, n - k);
  u128 r = 1;
  // r * (n-k+i) / i stays integral at every step.
  for (int i = 1; i <= k; ++i) r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  return static_cast<std::uint64_t>(r);
}

double falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = n - k + 1; i <= n; ++i) r *= i;
  return r;
}

Polynomial hermite(int n) {
  if (n < 0) throw InvalidArgument("hermite: n must be non-negative");
  std::vector<double> prev;        // H_{k-1}
  std::vector<double> cur{1.0};    // H_k
  for (int k = 0; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Polynomial(std::move(cur));
}

double hermite_value(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite_value: n must be non-negative");
  if (n == 0) return 1.0;
  double h0 = 1.0;
  double h1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

Polynomial one_minus_t2_pow(int n) {
  if (n < 0) throw InvalidArgument("one_minus_t2_pow: n must be non-negative");
  if (n > kOrderCap)
    throw InvalidArgument("one_minus_t2_pow: n above cap " + std::to_string(kOrderCap));
  std::vector<double> c(2 * n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    const double b = static_cast<double>(binomial(n, k));
    c[2 * k] = (k % 2 == 0) ? b : -b;
  }
  return Polynomial(std::move(c));
}

namespace {

double sph_j0(double x) { return std::sin(x) / x; }
double sph_j1(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }

double sph_series(int n, double x) {
  const double lead = std::pow(x, n) / double_factorial(2 * n + 1);
  const double y = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100; ++k) {
    term *= y / (k * (2.0 * n + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

double sph_miller(int n, double x) {
  const int start = std::max(n, static_cast<int>(x)) + 50;
  double next = 0.0;  // f_{k+1}
  double cur = 1e-30; // f_k
  double norm = (2.0 * start + 1.0) * cur * cur;
  double at_n = (start == n) ? cur : 0.0;
  double f1 = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k + 1.0) / x * cur - next;  // f_{k-1}
    next = cur;
    cur = prev;
    norm += (2.0 * (k - 1) + 1.0) * cur * cur;
    if (k - 1 == n) at_n = cur;
    if (k - 1 == 1) f1 = cur;
    if (std::abs(cur) > 1e150) {
      constexpr double s = 1e-150;
      cur *= s;
      next *= s;
      at_n *= s;
      f1 *= s;
      norm *= s * s;
    }
  }
  const double f0 = cur;
  double scale = 1.0 / std::sqrt(norm);
  const double j0 = sph_j0(x);
  const double j1 = sph_j1(x);
  const bool flip = std::abs(j0) >= std::abs(j1) ? (f0 * j0 < 0.0) : (f1 * j1 < 0.0);
  if (flip) scale = -scale;
  return at_n * scale;
}

double sph_upward(int n, double x) {
  double a = sph_j0(x);
  if (n == 0) return a;
  double b = sph_j1(x);
  for (int k = 1; k < n; ++k) {
    const double c = (2.0 * k + 1.0) / x * b - a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

double spherical_bessel_j(int n, double x) {
  if (n < 0) throw InvalidArgument("spherical_bessel_j: n must be non-negative");
  if (x < 0.0) {
    const double v = spherical_bessel_j(n, -x);
    return (n % 2 == 0) ? v : -v;
  }
  if (x < 1.0) return sph_series(n, x);
  if (x < n) return sph_miller(n, x);
  return sph_upward(n, x);
}

namespace {

template <typename T>
T neumaier_sorted(std::span<const T> terms) {
  std::vector<T> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(),
            [](T a, T b) { return std::abs(a) < std::abs(b); });
  T sum = 0;
  T comp = 0;
  for (T v : sorted) {
    const T t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double compensated_sum(std::span<const double> terms) { return neumaier_sorted(terms); }

long double compensated_sum(std::span<const long double> terms) {
  return neumaier_sorted(terms);
}

}  // namespace besselgauss
