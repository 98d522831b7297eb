// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "besselgauss/closed_form.hpp"
#include "besselgauss/numerics.hpp"
#include "besselgauss/oracle.hpp"
#include "besselgauss/quadrature.hpp"

#ifndef BESSELGAUSS_CLI_PATH
#error "BESSELGAUSS_CLI_PATH must point at the besselgauss executable"
#endif

using namespace besselgauss;

namespace {

__extension__ using i128 = __int128;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<EvalParams> acceptance_grid() {
  std::vector<EvalParams> g;
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; m + n <= 8; ++n)
      for (double beta : {0.5, 1.0, 2.0})
        for (double q : {0.0, 0.5, 1.0, 3.0}) g.push_back({m, n, beta, q});
  return g;
}

std::string describe(const EvalParams& p) {
  std::ostringstream os;
  os << "(m=" << p.m << ", n=" << p.n << ", beta=" << p.beta << ", q=" << p.q << ")";
  return os.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

constexpr double kQuadTol = 1e-13;

Outcome closed_vs_direct() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  EvalParams at{};
  for (const auto& p : acceptance_grid()) {
    const double d = relative_disagreement(eval_closed(p), eval_quadrature_direct(p, kQuadTol).value);
    if (d > worst) worst = d, at = p;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-10 && secs <= 60.0,
          "max rel " + sci(worst) + " at " + describe(at) + " (tol 1e-10), " + sci(secs) + " s (limit 60 s)"};
}

Outcome tri_path() {
  double worst = 0.0;
  EvalParams at{};
  for (const auto& p : acceptance_grid()) {
    const ComplexValue h = eval_quadrature_hermite(p, kQuadTol).value;
    const double d = std::max(relative_disagreement(h, eval_closed(p)),
                              relative_disagreement(h, eval_quadrature_direct(p, kQuadTol).value));
    if (d > worst) worst = d, at = p;
  }
  return {worst <= 1e-9, "max rel " + sci(worst) + " at " + describe(at) + " (tol 1e-9)"};
}

Outcome analytic_pin() {
  const EvalParams p{0, 0, 1.0, 1.0};
  const ComplexValue exact{0.0, -(1.0 - std::exp(-1.0)) / std::numbers::sqrt2};
  const double e_closed = abs(eval_closed(p) - exact);
  const double e_direct = abs(eval_quadrature_direct(p, 1e-14).value - exact);
  const double e_hermite = abs(eval_quadrature_hermite(p, 1e-14).value - exact);
  const double worst = std::max({e_closed, e_direct, e_hermite});
  return {worst <= 1e-12, "abs errors closed " + sci(e_closed) + ", direct " + sci(e_direct) +
                              ", hermite " + sci(e_hermite) + " (tol 1e-12)"};
}

Outcome endpoint_exactness() {
  int mismatches = 0;
  int checked = 0;
  for (int n = 0; n <= 10; ++n) {
    // (1-t^2)^n in exact integers.
    std::vector<i128> poly(static_cast<std::size_t>(2 * n + 1), 0);
    i128 binom = 1;
    for (int k = 0; k <= n; ++k) {
      poly[static_cast<std::size_t>(2 * k)] = (k % 2 ? -binom : binom);
      binom = binom * (n - k) / (k + 1);
    }
    const EndpointWeights w = endpoint_weights(n);
    std::vector<i128> d = poly;
    for (int k = 0; k <= 2 * n + 3; ++k) {
      i128 plus = 0;
      i128 minus = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        plus += d[i];
        minus += (i % 2 ? -d[i] : d[i]);
      }
      ++checked;
      if (w.at_plus1(k) != static_cast<double>(plus) || w.at_minus1(k) != static_cast<double>(minus))
        ++mismatches;
      const bool in_range = k >= n && k <= 2 * n;
      if (!in_range && (w.at_plus1(k) != 0.0 || w.at_minus1(k) != 0.0)) ++mismatches;
      // differentiate
      if (!d.empty()) {
        for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = d[i] * static_cast<i128>(i);
        d.pop_back();
      }
    }
  }
  return {mismatches == 0,
          std::to_string(checked) + " (n,k) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome e_recursion() {
  double worst = 0.0;
  for (double beta : {0.5, 1.0, 2.0})
    for (double q : {0.0, 1.0, 3.0}) {
      const EvalParams p{0, 0, beta, q};
      const Polynomial shift = Polynomial{q, -1.0} * (1.0 / (2.0 * beta * beta));
      for (int n = 0; n <= 8; ++n) {
        const Polynomial lhs = e_poly(n + 1, p);
        const Polynomial rhs = e_poly(n, p).derivative() + shift * e_poly(n, p);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
          const double r = i < rhs.size() ? rhs[i] : 0.0;
          worst = std::max(worst, std::abs(lhs[i] - r) / std::max(1.0, std::abs(lhs[i])));
        }
      }
    }
  return {worst <= 1e-12, "max coefficient rel " + sci(worst) + " (tol 1e-12)"};
}

Outcome moments() {
  double worst = 0.0;
  for (double beta : {0.5, 1.0, 2.0})
    for (double q : {0.0, 1.0, 3.0}) {
      const EvalParams p{0, 0, beta, q};
      const double lo = -(q + 1.0) / (2.0 * beta);
      const double hi = (1.0 - q) / (2.0 * beta);
      for (int j = 0; j <= 17; ++j) {
        quad::AdaptiveOptions opts;
        opts.abs_tol = 1e-15;
        const double ref =
            quad::adaptive_gk21([j](double v) { return std::pow(v, j) * std::exp(-v * v); }, lo, hi, opts)
                .value;
        const double got = (j % 2 == 0) ? gaussian_moment_even(j / 2, p) : gaussian_moment_odd(j / 2, p);
        worst = std::max(worst, std::abs(got - ref));
      }
    }
  return {worst <= 1e-12, "max abs " + sci(worst) + " (tol 1e-12)"};
}

Outcome symmetry() {
  double purity = 0.0;
  double conj_err = 0.0;
  for (const auto& p : acceptance_grid()) {
    const ComplexValue v = eval_closed(p);
    const int big_n = p.m + p.n + 1;
    // i^N * v; its imaginary part must vanish.
    ComplexValue rotated = v;
    for (int k = 0; k < big_n % 4; ++k) rotated = {-rotated.im, rotated.re};
    purity = std::max(purity, std::abs(rotated.im) / (1.0 + abs(v)));
    const ComplexValue mirrored = eval_closed({p.m, p.n, p.beta, -p.q});
    conj_err = std::max(conj_err, abs(mirrored - conj(v)) / (1.0 + abs(v)));
  }
  return {purity <= 1e-12 && conj_err <= 1e-12,
          "phase purity " + sci(purity) + ", conjugate symmetry " + sci(conj_err) + " (tol 1e-12)"};
}

struct Captured {
  int code;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string cmd = std::string(BESSELGAUSS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  Captured c{-1, {}};
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) c.out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Outcome cli_contract() {
  const Captured verify = run_cli("verify");
  const std::string table_args = "table --method all";
  const Captured t1 = run_cli(table_args);
  const Captured t2 = run_cli(table_args);
  const bool deterministic = t1.code == 0 && t2.code == 0 && !t1.out.empty() && t1.out == t2.out;
  std::string summary = verify.out;
  if (const auto pos = summary.rfind("points="); pos != std::string::npos) summary = summary.substr(pos);
  while (!summary.empty() && summary.back() == '\n') summary.pop_back();
  return {verify.code == 0 && deterministic,
          "verify exit " + std::to_string(verify.code) + " [" + summary + "], table runs " +
              (deterministic ? "byte-identical" : "DIFFER") + " (" + std::to_string(t1.out.size()) +
              " bytes)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 closed form vs direct quadrature", closed_vs_direct},
      {"AC2 three-path agreement", tri_path},
      {"AC3 analytic pin I_00(1,1)", analytic_pin},
      {"AC4 endpoint-weight exactness", endpoint_exactness},
      {"AC5 E-recursion identity", e_recursion},
      {"AC6 Gaussian moment formulas", moments},
      {"AC7 parity and conjugate symmetry", symmetry},
      {"AC8 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
