#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "besselgauss/closed_form.hpp"

namespace besselgauss::cli {

enum class Method { Closed, QuadDirect, QuadHermite, All };

const char* to_string(Method m) noexcept;
Method parse_method(const std::string& s);

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct SweepSpec {
  IntRange m_range{0, 8};
  IntRange n_range{0, 8};
  int max_order = 8;  // keep points with m + n <= max_order; negative disables
  std::vector<double> beta_list{0.5, 1.0, 2.0};
  std::vector<double> q_list{0.0, 0.5, 1.0, 3.0};
  Method method = Method::Closed;
  double tol = 1e-9;
  int max_subdivisions = 4000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// "lo..hi" (inclusive) or a single integer.
IntRange parse_range(const std::string& s);
/// Comma-separated reals.
std::vector<double> parse_list(const std::string& s);

/// Throws InvalidArgument if any range is empty, a beta is non-positive or
/// tol is not positive.
void validate(const SweepSpec& spec);

/// Grid points in lexicographic (m, n, beta, q) order.
std::vector<EvalParams> grid(const SweepSpec& spec);

/// Shortest form that prints 17 significant digits ("%.17g").
std::string format_real(double v);

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Returns the process exit code:
///   0 success, 1 verification failure, 2 invalid arguments,
///   3 evaluation or infrastructure error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besselgauss::cli
