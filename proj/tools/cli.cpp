#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "acceptance.hpp"
#include "spectrunc/metric.hpp"

namespace spectrunc::cli {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<int>(&c)) return std::to_string(*i);
  return format_double(std::get<double>(c));
}

double sandwich_margin(const RunConfig& cfg) { return std::max(1e-3, 10.0 * cfg.tol); }

DistanceOptions distance_options(const RunConfig& cfg) {
  DistanceOptions o;
  o.solver.tol = cfg.tol;
  o.oracle_samples = cfg.samples;
  o.seed = cfg.seed;
  return o;
}

}  // namespace

std::optional<std::string> validate(const RunConfig& cfg) {
  if (cfg.family != "toeplitz" && cfg.family != "fejer-riesz" && cfg.family != "fuzzy")
    return "family must be toeplitz, fejer-riesz or fuzzy";
  if (cfg.n < 1) return "n must be >= 1";
  if (cfg.n_max && *cfg.n_max < cfg.n) return "n-max must be >= n";
  if (cfg.x_steps < 2) return "x-steps must be >= 2";
  if (!(cfg.tol > 0.0)) return "tol must be > 0";
  if (cfg.samples < 0) return "samples must be >= 0";
  if (cfg.threads < 1) return "threads must be >= 1";
  return std::nullopt;
}

int resolve_threads(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SPECTRUNC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 1;
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell_text(row[c]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c)
      std::visit([&](const auto& v) { obj[t.columns[c]] = v; }, row[c]);
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

void write_table(const Table& t, Format f, std::ostream& os) {
  if (f == Format::csv)
    write_csv(t, os);
  else
    write_json(t, os);
}

int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (auto err = validate(cfg)) {
    log << "# error: " << *err << '\n';
    return 1;
  }
  const bool toeplitz = cfg.family == "toeplitz";
  if (!toeplitz && cfg.family != "fejer-riesz") {
    log << "# error: curve needs family toeplitz or fejer-riesz\n";
    return 1;
  }
  Table table{{"family", "n", "x", "d_n", "d_exact", "lower_band", "solver_iters", "feasibility_residual",
               "oracle_lower_bound"},
              {}};
  int violations = 0;
  try {
    for (int n = cfg.n; n <= cfg.last_n(); ++n) {
      const double gamma = gamma_n(n);
      std::unique_ptr<OperatorSystem> sys;
      if (toeplitz)
        sys = std::make_unique<ToeplitzSystem>(n);
      else
        sys = std::make_unique<FejerRieszSystem>(n);
      const State origin = toeplitz ? State::symbol_pullback(0.0, n) : State::embed_pullback(0.0, n);
      const auto steps = static_cast<std::size_t>(cfg.x_steps);
      std::vector<DistanceResult> results(steps);
      parallel_for(steps, cfg.threads, [&](std::size_t j) {
        const double x = 2.0 * kPi * static_cast<double>(j) / cfg.x_steps;
        const State s = toeplitz ? State::symbol_pullback(x, n) : State::embed_pullback(x, n);
        results[j] = connes_distance(*sys, origin, s, distance_options(cfg));
      });
      int bad = 0;
      for (std::size_t j = 0; j < steps; ++j) {
        const double x = 2.0 * kPi * static_cast<double>(j) / cfg.x_steps;
        const double exact = exact_circle_distance(0.0, x);
        const auto& r = results[j];
        if (!sandwich_check(r.value, exact, gamma, sandwich_margin(cfg))) ++bad;
        table.rows.push_back({cfg.family, n, x, r.value, exact, std::max(0.0, exact - 2.0 * gamma), r.iterations,
                              r.feasibility_residual, r.oracle_lower_bound});
      }
      log << "# curve " << cfg.family << " n=" << n << " points=" << steps << " gamma_n=" << format_double(gamma)
          << " sandwich_violations=" << bad << '\n';
      violations += bad;
    }
  } catch (const std::exception& e) {
    log << "# error: " << e.what() << '\n';
    return 2;
  }
  write_table(table, cfg.format, out);
  return violations == 0 ? 0 : 2;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (auto err = validate(cfg)) {
    log << "# error: " << *err << '\n';
    return 1;
  }
  const bool toeplitz = cfg.family == "toeplitz";
  if (!toeplitz && cfg.family != "fejer-riesz") {
    log << "# error: bounds needs family toeplitz or fejer-riesz\n";
    return 1;
  }
  Table table{{"family", "n", "gamma_n", "gamma_prime_n", "gh_upper_bound"}, {}};
  int violations = 0;
  double prev_g = 0.0, prev_gp = 0.0;
  for (int n = cfg.n; n <= cfg.last_n(); ++n) {
    const double g = gamma_n(n);
    const double gp = toeplitz ? gamma_prime_n(n) : gamma_prime_fr(n);
    // both sequences decrease strictly once n >= 2
    if (n > cfg.n && n > 2 && (g >= prev_g || gp >= prev_gp)) ++violations;
    prev_g = g;
    prev_gp = gp;
    table.rows.push_back({cfg.family, n, g, gp, gh_upper_bound(g, gp)});
  }
  log << "# bounds " << cfg.family << " n=" << cfg.n << ".." << cfg.last_n() << " monotonicity_violations=" << violations
      << '\n';
  write_table(table, cfg.format, out);
  return violations == 0 ? 0 : 2;
}

int cmd_fuzzy(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (auto err = validate(cfg)) {
    log << "# error: " << *err << '\n';
    return 1;
  }
  if (cfg.family != "fuzzy") {
    log << "# error: fuzzy needs family fuzzy\n";
    return 1;
  }
  Table table{{"n", "theta", "d_n", "d_round", "gamma_sphere", "quant_error_ratio"}, {}};
  int violations = 0;
  try {
    for (int n = cfg.n; n <= cfg.last_n(); ++n) {
      const Su2Rep rep(n);
      const FuzzySystem sys(rep);
      const double gamma = gamma_sphere(rep);
      const double ratio = max_quantization_ratio(n, cfg.samples, cfg.seed);
      const State north = State::berezin_pullback(rep, SpherePoint::north());
      // theta_j = pi j / x_steps for j = 1..x_steps-1 (the antipode is left out)
      const auto count = static_cast<std::size_t>(cfg.x_steps - 1);
      std::vector<DistanceResult> results(count);
      parallel_for(count, cfg.threads, [&](std::size_t j) {
        const double theta = kPi * static_cast<double>(j + 1) / cfg.x_steps;
        results[j] = connes_distance(sys, north, State::berezin_pullback(rep, {theta, 0.0}), distance_options(cfg));
      });
      int bad = 0;
      for (std::size_t j = 0; j < count; ++j) {
        const double theta = kPi * static_cast<double>(j + 1) / cfg.x_steps;
        if (results[j].value > theta + cfg.tol) ++bad;
        table.rows.push_back({n, theta, results[j].value, theta, gamma, ratio});
      }
      log << "# fuzzy n=" << n << " gamma_sphere=" << format_double(gamma) << " quant_error_ratio="
          << format_double(ratio) << " contraction_violations=" << bad << '\n';
      violations += bad;
    }
  } catch (const std::exception& e) {
    log << "# error: " << e.what() << '\n';
    return 2;
  }
  write_table(table, cfg.format, out);
  return violations == 0 ? 0 : 2;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  AcceptanceOptions opts;
  opts.seed = cfg.seed;
  opts.gamma_prime_fault = cfg.gamma_prime_fault;
  opts.only = cfg.only;
  opts.log = &log;
  const auto results = run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results) {
    out << format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  log << "# selftest: " << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 2;
}

int run(int argc, char** argv) {
  CLI::App app{"Connes distances on spectral truncations of the circle and the fuzzy sphere"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  int n_max = 0;
  int threads = 1;
  std::string format = "csv";
  app.add_option("--family", cfg.family, "toeplitz, fejer-riesz or fuzzy")
      ->check(CLI::IsMember({"toeplitz", "fejer-riesz", "fuzzy"}));
  app.add_option("--n", cfg.n, "system size (first n of a range)");
  auto* n_max_opt = app.add_option("--n-max", n_max, "last n of a range");
  app.add_option("--x-steps", cfg.x_steps, "grid points per curve");
  app.add_option("--tol", cfg.tol, "solver tolerance");
  app.add_option("--samples", cfg.samples, "random samples for oracles and error ratios");
  app.add_option("--seed", cfg.seed, "random seed");
  auto* threads_opt = app.add_option("--threads", threads, "worker threads (default: SPECTRUNC_THREADS or 1)");
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* curve = app.add_subcommand("curve", "distance from the origin along the circle");
  auto* bounds = app.add_subcommand("bounds", "error constants and the Gromov–Hausdorff bound");
  auto* fuzzy = app.add_subcommand("fuzzy", "fuzzy-sphere distances and quantization error");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--fault-gamma-prime", cfg.gamma_prime_fault, "perturb gamma' (fault injection)");
  selftest->add_option("--only", cfg.only, "run only these criteria")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (n_max_opt->count() > 0) cfg.n_max = n_max;
  cfg.threads = resolve_threads(threads_opt->count() > 0 ? std::optional<int>(threads) : std::nullopt);
  cfg.format = format == "json" ? Format::json : Format::csv;
  if (auto err = validate(cfg)) {
    std::cerr << "error: " << *err << '\n';
    return 1;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.out << '\n';
      return 1;
    }
  }
  std::ostream& out = cfg.out.empty() ? std::cout : file;

  int code = 0;
  if (curve->parsed()) {
    cfg.command = "curve";
    code = cmd_curve(cfg, out, std::cout);
  } else if (bounds->parsed()) {
    cfg.command = "bounds";
    code = cmd_bounds(cfg, out, std::cout);
  } else if (fuzzy->parsed()) {
    cfg.command = "fuzzy";
    code = cmd_fuzzy(cfg, out, std::cout);
  } else {
    cfg.command = "selftest";
    code = cmd_selftest(cfg, out, std::cout);
  }
  out.flush();
  if (!out) {
    std::cerr << "error: write failed\n";
    return 1;
  }
  return code;
}

}  // namespace spectrunc::cli
