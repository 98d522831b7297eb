#include "besselgauss/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "besselgauss/errors.hpp"
#include "besselgauss/numerics.hpp"

namespace besselgauss::quad {

namespace {

// Gauss-Kronrod 10/21 (QUADPACK dqk21). Odd-indexed Kronrod abscissae are
// the Gauss nodes; the last entry is the centre.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kRoundoffFactor = 50.0 * std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  std::vector<double> kronrod;
  std::vector<double> abs_kronrod;
  double error;  // max over components
};

using VectorFn = std::function<void(double, std::span<double>)>;

Panel evaluate_panel(const VectorFn& f, std::size_t dim, double a, double b,
                     std::vector<double>& scratch) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Panel p{a, b, std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0), 0.0};
  std::vector<double> gauss(dim, 0.0);

  f(centre, scratch);
  for (std::size_t c = 0; c < dim; ++c) {
    p.kronrod[c] = kWgk[10] * scratch[c];
    p.abs_kronrod[c] = kWgk[10] * std::abs(scratch[c]);
  }
  std::vector<double> lo(dim);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f(centre - dx, lo);
    f(centre + dx, scratch);
    for (std::size_t c = 0; c < dim; ++c) {
      const double pair = lo[c] + scratch[c];
      p.kronrod[c] += kWgk[j] * pair;
      p.abs_kronrod[c] += kWgk[j] * (std::abs(lo[c]) + std::abs(scratch[c]));
      if (j % 2 == 1) gauss[c] += kWg[j / 2] * pair;
    }
  }
  for (std::size_t c = 0; c < dim; ++c) {
    p.kronrod[c] *= half;
    p.abs_kronrod[c] *= std::abs(half);
    gauss[c] *= half;
    p.error = std::max(p.error, std::abs(p.kronrod[c] - gauss[c]));
  }
  return p;
}

}  // namespace

std::vector<Estimate> adaptive_gk21(const VectorFn& f, std::size_t components, double a,
                                    double b, const AdaptiveOptions& opts) {
  std::vector<double> scratch(components);
  std::vector<Panel> heap;
  int initial = 1;
  if (opts.max_panel_width > 0.0)
    initial = std::max(1, static_cast<int>(std::ceil((b - a) / opts.max_panel_width)));
  if (initial > opts.max_subdivisions)
    throw EvaluationError(EvaluationError::Reason::NoConvergence,
                          "quadrature needs " + std::to_string(initial) +
                              " initial panels, budget is " + std::to_string(opts.max_subdivisions));
  const double width = (b - a) / initial;
  for (int i = 0; i < initial; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == initial) ? b : a + (i + 1) * width;
    heap.push_back(evaluate_panel(f, components, lo, hi, scratch));
  }
  const auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::make_heap(heap.begin(), heap.end(), by_error);

  const auto totals = [&](double& err, double& absint) {
    err = 0.0;
    absint = 0.0;
    for (const Panel& p : heap) {
      err += p.error;
      double m = 0.0;
      for (double v : p.abs_kronrod) m = std::max(m, v);
      absint += m;
    }
  };

  long evaluations = 21L * initial;
  double err = 0.0;
  double absint = 0.0;
  totals(err, absint);
  while (err > std::max(opts.abs_tol, kRoundoffFactor * absint)) {
    if (static_cast<int>(heap.size()) >= opts.max_subdivisions)
      throw EvaluationError(EvaluationError::Reason::NoConvergence,
                            "quadrature did not converge within " +
                                std::to_string(opts.max_subdivisions) + " panels");
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = std::move(heap.back());
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(evaluate_panel(f, components, worst.a, mid, scratch));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(evaluate_panel(f, components, mid, worst.b, scratch));
    std::push_heap(heap.begin(), heap.end(), by_error);
    evaluations += 42;
    totals(err, absint);
  }

  std::vector<Estimate> out(components);
  std::vector<double> parts(heap.size());
  for (std::size_t c = 0; c < components; ++c) {
    double abs_total = 0.0;
    for (std::size_t i = 0; i < heap.size(); ++i) {
      parts[i] = heap[i].kronrod[c];
      abs_total += heap[i].abs_kronrod[c];
    }
    out[c].value = compensated_sum(parts);
    out[c].abs_error = err;
    out[c].abs_integral = abs_total;
    out[c].evaluations = evaluations;
  }
  return out;
}

Estimate adaptive_gk21(const std::function<double(double)>& f, double a, double b,
                       const AdaptiveOptions& opts) {
  const VectorFn wrapped = [&f](double x, std::span<double> out) { out[0] = f(x); };
  return adaptive_gk21(wrapped, 1, a, b, opts).front();
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

namespace {

Estimate apply_rule(const GaussLegendreRule& rule, const std::function<double(double)>& f,
                    double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<double> parts(rule.nodes.size());
  double abs_total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(centre + half * rule.nodes[i]);
    parts[i] = rule.weights[i] * v;
    abs_total += rule.weights[i] * std::abs(v);
  }
  return {compensated_sum(parts) * half, 0.0, abs_total * std::abs(half),
          static_cast<long>(rule.nodes.size())};
}

}  // namespace

Estimate gauss_legendre_escalating(const std::function<double(double)>& f, double a,
                                   double b, double abs_tol, int min_order, int max_order) {
  Estimate prev = apply_rule(gauss_legendre(min_order), f, a, b);
  long evaluations = prev.evaluations;
  for (int order = 2 * min_order; order <= max_order; order *= 2) {
    Estimate cur = apply_rule(gauss_legendre(order), f, a, b);
    evaluations += cur.evaluations;
    const double diff = std::abs(cur.value - prev.value);
    if (diff <= std::max(abs_tol, kRoundoffFactor * cur.abs_integral)) {
      cur.abs_error = diff;
      cur.evaluations = evaluations;
      return cur;
    }
    prev = cur;
  }
  throw EvaluationError(EvaluationError::Reason::NoConvergence,
                        "Gauss-Legendre did not converge by order " + std::to_string(max_order));
}

}  // namespace besselgauss::quad
