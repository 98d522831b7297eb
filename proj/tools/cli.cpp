#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "besselgauss/errors.hpp"
#include "besselgauss/oracle.hpp"

namespace besselgauss::cli {

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadArgs = 2, kEvalError = 3 };

double parse_real(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first != last && *first == ' ') ++first;
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw InvalidArgument("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("not an integer: '" + s + "'");
  return v;
}

std::optional<std::string> env(const char* name) {
  if (const char* v = std::getenv(name); v != nullptr && *v != '\0') return std::string(v);
  return std::nullopt;
}

double default_tol() {
  if (auto v = env("BESSELGAUSS_TOL")) {
    const double t = parse_real(*v);
    if (!(t > 0.0)) throw InvalidArgument("BESSELGAUSS_TOL must be positive");
    return t;
  }
  return 1e-9;
}

int default_max_subdivisions() {
  if (auto v = env("BESSELGAUSS_MAX_SUBDIV")) {
    const int n = parse_int(*v);
    if (n < 1) throw InvalidArgument("BESSELGAUSS_MAX_SUBDIV must be positive");
    return n;
  }
  return 4000;
}

double quad_tol(double tol) { return std::max(tol * 1e-3, 1e-14); }

// Result of one cell: a value or an error code.
struct Cell {
  ComplexValue value;
  std::optional<std::string> error;  // invalid | overflow | cap | noconv
  std::string message;
};

Cell evaluate(const EvalParams& p, Method method, double tol, int max_subdivisions) {
  Cell c;
  try {
    switch (method) {
      case Method::Closed: c.value = eval_closed(p); break;
      case Method::QuadDirect:
        c.value = eval_quadrature_direct(p, QuadratureOptions{quad_tol(tol), max_subdivisions}).value;
        break;
      case Method::QuadHermite: c.value = eval_quadrature_hermite(p, quad_tol(tol)).value; break;
      case Method::All: throw InvalidArgument("method 'all' has no single value");
    }
  } catch (const EvaluationError& e) {
    c.error = to_string(e.reason());
    c.message = e.what();
  } catch (const InvalidArgument& e) {
    c.error = "invalid";
    c.message = e.what();
  }
  return c;
}

// Evaluates fn(i) for i in [0, count) on a small thread pool; results keep
// index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

std::string params_fields(const EvalParams& p) {
  return std::to_string(p.m) + "," + std::to_string(p.n) + "," + format_real(p.beta) + "," +
         format_real(p.q);
}

std::string cell_fields(const Cell& c) {
  if (c.error) return "ERR:" + *c.error + ",ERR:" + *c.error;
  return format_real(c.value.re) + "," + format_real(c.value.im);
}

std::string json_record(const EvalParams& p, Method m, const ComplexValue& v) {
  std::ostringstream os;
  os << "{\"m\":" << p.m << ",\"n\":" << p.n << ",\"beta\":" << format_real(p.beta)
     << ",\"q\":" << format_real(p.q) << ",\"method\":\"" << to_string(m)
     << "\",\"re\":" << format_real(v.re) << ",\"im\":" << format_real(v.im) << "}";
  return os.str();
}

std::string describe(const EvalParams& p) {
  return "m=" + std::to_string(p.m) + " n=" + std::to_string(p.n) + " beta=" +
         format_real(p.beta) + " q=" + format_real(p.q);
}

void add_sweep_options(CLI::App& cmd, std::string& m, std::string& n, int& max_order,
                       std::string& betas, std::string& qs, std::string& method,
                       std::optional<double>& tol, unsigned& threads) {
  cmd.add_option("--m", m, "m range, lo..hi or a single value")->capture_default_str();
  cmd.add_option("--n", n, "n range, lo..hi or a single value")->capture_default_str();
  cmd.add_option("--max-order", max_order, "keep points with m+n <= this; -1 disables")
      ->capture_default_str();
  cmd.add_option("--beta", betas, "comma-separated beta values")->capture_default_str();
  cmd.add_option("--q", qs, "comma-separated q values")->capture_default_str();
  cmd.add_option("--method", method, "closed | quad-direct | quad-hermite | all")
      ->capture_default_str();
  cmd.add_option("--tol", tol, "comparison tolerance (default BESSELGAUSS_TOL or 1e-9)");
  cmd.add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
}

int cmd_eval(const EvalParams& p, Method method, const std::string& format, double tol,
             int max_subdivisions, std::ostream& out, std::ostream& err) {
  std::vector<Method> methods;
  if (method == Method::All)
    methods = {Method::Closed, Method::QuadDirect, Method::QuadHermite};
  else
    methods = {method};

  std::vector<Cell> cells;
  for (Method m : methods) {
    Cell c = evaluate(p, m, tol, max_subdivisions);
    if (c.error) {
      err << "error: " << c.message << "\n";
      return *c.error == "invalid" ? kBadArgs : kEvalError;
    }
    cells.push_back(std::move(c));
  }
  if (format == "csv") out << "m,n,beta,q,method,re,im\n";
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (format == "csv")
      out << params_fields(p) << "," << to_string(methods[i]) << "," << cell_fields(cells[i])
          << "\n";
    else
      out << json_record(p, methods[i], cells[i].value) << "\n";
  }
  return kOk;
}

int cmd_table(const SweepSpec& spec, std::ostream& out) {
  const auto points = grid(spec);
  std::vector<Method> methods;
  if (spec.method == Method::All)
    methods = {Method::Closed, Method::QuadDirect, Method::QuadHermite};
  else
    methods = {spec.method};

  const auto rows = parallel_map<std::vector<Cell>>(
      points.size(), spec.threads, [&](std::size_t i) {
        std::vector<Cell> row;
        for (Method m : methods) row.push_back(evaluate(points[i], m, spec.tol, spec.max_subdivisions));
        return row;
      });

  out << "m,n,beta,q";
  if (spec.method == Method::All)
    out << ",closed_re,closed_im,quad_direct_re,quad_direct_im,quad_hermite_re,quad_hermite_im";
  else
    out << ",re,im";
  out << "\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << params_fields(points[i]);
    for (const Cell& c : rows[i]) out << "," << cell_fields(c);
    out << "\n";
  }
  return kOk;
}

int cmd_verify(const SweepSpec& spec, std::ostream& out) {
  const auto points = grid(spec);
  const auto reports = parallel_map<ComparisonReport>(
      points.size(), spec.threads,
      [&](std::size_t i) { return compare(points[i], spec.tol, spec.max_subdivisions); });

  std::size_t passed = 0;
  std::size_t failed = 0;
  bool infrastructure = false;
  double worst = -1.0;
  const ComparisonReport* worst_report = nullptr;
  for (const auto& r : reports) {
    if (r.error) {
      ++failed;
      if (r.error_code == "noconv") infrastructure = true;
      out << "ERR  " << describe(r.params) << " ERR:" << *r.error_code << " " << *r.error << "\n";
      continue;
    }
    out << (r.pass ? "PASS " : "FAIL ") << describe(r.params)
        << " disagreement=" << format_real(r.max_rel_disagreement) << "\n";
    (r.pass ? passed : failed) += 1;
    if (r.max_rel_disagreement > worst) {
      worst = r.max_rel_disagreement;
      worst_report = &r;
    }
  }
  out << "points=" << reports.size() << " passed=" << passed << " failed=" << failed
      << " tol=" << format_real(spec.tol) << " max_disagreement="
      << (worst_report ? format_real(worst) : std::string("n/a")) << " worst="
      << (worst_report ? "[" + describe(worst_report->params) + "]" : std::string("n/a"))
      << "\n";
  if (infrastructure) return kEvalError;
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::QuadDirect: return "quad-direct";
    case Method::QuadHermite: return "quad-hermite";
    case Method::All: return "all";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "closed") return Method::Closed;
  if (s == "quad-direct") return Method::QuadDirect;
  if (s == "quad-hermite") return Method::QuadHermite;
  if (s == "all") return Method::All;
  throw InvalidArgument("unknown method '" + s + "'");
}

IntRange parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(s);
    return {v, v};
  }
  return {parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2))};
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_real(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void validate(const SweepSpec& spec) {
  if (spec.m_range.lo > spec.m_range.hi || spec.n_range.lo > spec.n_range.hi)
    throw InvalidArgument("ranges must be non-empty (lo..hi with lo <= hi)");
  if (spec.m_range.lo < 0 || spec.n_range.lo < 0)
    throw InvalidArgument("m and n must be non-negative");
  if (spec.beta_list.empty() || spec.q_list.empty())
    throw InvalidArgument("beta and q lists must be non-empty");
  for (double b : spec.beta_list)
    if (!std::isfinite(b) || b <= 0.0) throw InvalidArgument("beta must be positive");
  for (double q : spec.q_list)
    if (!std::isfinite(q)) throw InvalidArgument("q must be finite");
  if (!(spec.tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (grid(spec).empty()) throw InvalidArgument("sweep grid is empty");
}

std::vector<EvalParams> grid(const SweepSpec& spec) {
  std::vector<EvalParams> points;
  for (int m = spec.m_range.lo; m <= spec.m_range.hi; ++m)
    for (int n = spec.n_range.lo; n <= spec.n_range.hi; ++n) {
      if (spec.max_order >= 0 && m + n > spec.max_order) continue;
      for (double b : spec.beta_list)
        for (double q : spec.q_list) points.push_back({m, n, b, q});
    }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form and quadrature evaluation of I_mn(beta, q) = "
               "int exp(-beta^2 x^2 - i q x) x^(m+1/2) J_(n+1/2)(x) dx",
               "besselgauss"};
  app.require_subcommand(1);

  // eval
  int m = 0;
  int n = 0;
  double beta = 0.0;
  double q = 0.0;
  std::string eval_method = "closed";
  std::string format = "json";
  std::optional<double> eval_tol;
  auto* eval = app.add_subcommand("eval", "evaluate a single point");
  eval->add_option("--m", m, "power index m >= 0")->required();
  eval->add_option("--n", n, "Bessel order index n >= 0")->required();
  eval->add_option("--beta", beta, "Gaussian width beta > 0")->required();
  eval->add_option("--q", q, "Fourier variable q")->required();
  eval->add_option("--method", eval_method, "closed | quad-direct | quad-hermite | all")
      ->capture_default_str();
  eval->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  eval->add_option("--tol", eval_tol, "quadrature comparison tolerance");

  // table / verify share the sweep flags
  std::string t_m = "0..8", t_n = "0..8", t_betas = "0.5,1,2", t_qs = "0,0.5,1,3",
              t_method = "closed";
  int t_order = 8;
  std::optional<double> t_tol;
  unsigned t_threads = 0;
  auto* table = app.add_subcommand("table", "CSV sweep over a parameter grid");
  add_sweep_options(*table, t_m, t_n, t_order, t_betas, t_qs, t_method, t_tol, t_threads);

  std::string v_m = "0..8", v_n = "0..8", v_betas = "0.5,1,2", v_qs = "0,0.5,1,3",
              v_method = "all";
  int v_order = 8;
  std::optional<double> v_tol;
  unsigned v_threads = 0;
  auto* verify = app.add_subcommand("verify", "cross-check closed form against both oracles");
  add_sweep_options(*verify, v_m, v_n, v_order, v_betas, v_qs, v_method, v_tol, v_threads);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  }

  try {
    const int max_subdivisions = default_max_subdivisions();
    if (eval->parsed()) {
      const EvalParams p{m, n, beta, q};
      const double tol = eval_tol.value_or(default_tol());
      if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
      return cmd_eval(p, parse_method(eval_method), format, tol, max_subdivisions, out, err);
    }
    const bool is_table = table->parsed();
    SweepSpec spec;
    spec.m_range = parse_range(is_table ? t_m : v_m);
    spec.n_range = parse_range(is_table ? t_n : v_n);
    spec.max_order = is_table ? t_order : v_order;
    spec.beta_list = parse_list(is_table ? t_betas : v_betas);
    spec.q_list = parse_list(is_table ? t_qs : v_qs);
    spec.method = parse_method(is_table ? t_method : v_method);
    spec.tol = (is_table ? t_tol : v_tol).value_or(default_tol());
    spec.max_subdivisions = max_subdivisions;
    spec.threads = is_table ? t_threads : v_threads;
    validate(spec);
    return is_table ? cmd_table(spec, out) : cmd_verify(spec, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEvalError;
  }
}

}  // namespace besselgauss::cli
