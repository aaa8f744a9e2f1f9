#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "spectrunc/metric.hpp"

namespace spectrunc::cli {

namespace {

constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

std::string fmt(double v, int digits = 6) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CMatrix random_hermitian(Rng& rng, int n) {
  std::normal_distribution<double> g;
  const auto un = static_cast<std::size_t>(n);
  CMatrix m(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t k = 0; k < un; ++k) m(i, k) = cplx{g(rng), g(rng)};
  return (m + m.adjoint()) * cplx{0.5, 0.0};
}

CMatrix random_density(Rng& rng, int n) {
  std::normal_distribution<double> g;
  const auto un = static_cast<std::size_t>(n);
  CMatrix a(un, un);
  for (auto& v : a.data()) v = cplx{g(rng), g(rng)};
  CMatrix rho = a * a.adjoint();
  return rho * cplx{1.0 / trace(rho).real(), 0.0};
}

FourierPoly random_real_poly(Rng& rng, int degree) {
  std::normal_distribution<double> g;
  FourierPoly f(degree);
  f.set(0, g(rng));
  for (int k = 1; k <= degree; ++k) {
    const cplx c{g(rng) / k, g(rng) / k};
    f.set(k, c);
    f.set(-k, std::conj(c));
  }
  return f;
}

template <class Element>
Element random_hermitian_element(Rng& rng, int n) {
  std::normal_distribution<double> g;
  Element a(n);
  a.set(0, g(rng));
  for (int k = 1; k < n; ++k) {
    const cplx c{g(rng), g(rng)};
    a.set(k, c);
    a.set(-k, std::conj(c));
  }
  return a;
}

SphereFunction random_real_function(Rng& rng, int degree) {
  std::normal_distribution<double> g;
  SphereFunction f(degree);
  for (int l = 0; l <= degree; ++l) {
    f.set(l, 0, g(rng));
    for (int m = 1; m <= l; ++m) {
      const cplx c{g(rng), g(rng)};
      f.set(l, m, c);
      f.set(l, -m, (m % 2 == 0 ? 1.0 : -1.0) * std::conj(c));
    }
  }
  return f;
}

double legendre(int l, double t) {
  double p0 = 1.0, p1 = t;
  if (l == 0) return p0;
  for (int k = 2; k <= l; ++k) {
    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

struct Outcome {
  bool passed;
  std::string detail;
};

DistanceOptions quiet_options() {
  DistanceOptions o;
  o.oracle_samples = 0;
  return o;
}

// --- 1 ---------------------------------------------------------------------

Outcome closed_forms(const AcceptanceOptions&) {
  bool ok = true;
  std::ostringstream detail;
  auto check = [&](const char* name, const OperatorSystem& sys, const State& a, const State& b) {
    const auto t0 = std::chrono::steady_clock::now();
    const double d = connes_distance(sys, a, b, quiet_options()).value;
    const double secs = seconds_since(t0);
    ok = ok && std::abs(d - 2.0) <= 1e-3 && secs < 1.0;
    detail << name << "=" << fmt(d, 8) << " ";
  };
  check("toeplitz", ToeplitzSystem(2), State::symbol_pullback(0.0, 2), State::symbol_pullback(kPi, 2));
  check("fejer-riesz", FejerRieszSystem(2), State::embed_pullback(0.0, 2), State::embed_pullback(kPi, 2));
  return {ok, detail.str() + "(expected 2, each under 1 s)"};
}

// --- 2, 3 ------------------------------------------------------------------

struct BandReport {
  int violations = 0;
  double even_gap = 0.0;
  double at_zero = 0.0;
};

BandReport band_sweep(const OperatorSystem& sys, const std::function<State(double)>& pullback, int n) {
  constexpr int kSteps = 64;
  const double gamma = gamma_n(n);
  const State origin = pullback(0.0);
  std::vector<double> d(kSteps);
  BandReport r;
  for (int j = 0; j < kSteps; ++j) {
    const double x = 2.0 * kPi * j / kSteps;
    d[static_cast<std::size_t>(j)] = connes_distance(sys, origin, pullback(x), quiet_options()).value;
    if (!sandwich_check(d[static_cast<std::size_t>(j)], exact_circle_distance(0.0, x), gamma)) ++r.violations;
  }
  for (int j = 1; j < kSteps; ++j)
    r.even_gap = std::max(r.even_gap, std::abs(d[static_cast<std::size_t>(j)] - d[static_cast<std::size_t>(kSteps - j)]));
  r.at_zero = d[0];
  return r;
}

Outcome toeplitz_band(const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (int n : {3, 5, 9}) {
    const auto r = band_sweep(ToeplitzSystem(n), [n](double x) { return State::symbol_pullback(x, n); }, n);
    ok = ok && r.violations == 0 && r.even_gap <= 1e-3 && r.at_zero <= 1e-9;
    detail << "n=" << n << " out-of-band=" << r.violations << " even-gap=" << fmt(r.even_gap, 2) << "; ";
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  return {ok, detail.str() + "64 points each"};
}

Outcome fr_band(const AcceptanceOptions&) {
  bool ok = true;
  std::ostringstream detail;
  for (int n : {2, 3}) {
    const FejerRieszSystem sys(n);
    const double factor = bernstein_factor(n - 1, sys.grid_size());
    const auto r = band_sweep(sys, [n](double x) { return State::embed_pullback(x, n); }, n);
    ok = ok && r.violations == 0 && r.even_gap <= 1e-3 && r.at_zero <= 1e-9 && factor <= 1.01;
    detail << "n=" << n << " out-of-band=" << r.violations << " bernstein=" << fmt(factor, 6) << "; ";
  }
  return {ok, detail.str() + "64 points each"};
}

// --- 4 ---------------------------------------------------------------------

Outcome error_constants(const AcceptanceOptions& opts) {
  double worst = 0.0, worst_fr = 0.0;
  for (int n = 1; n <= 64; ++n) {
    // invert each formula instead of re-evaluating it
    const double gp = gamma_prime_n(n) + opts.gamma_prime_fault;
    worst = std::max(worst, std::abs(kPi * (0.5 * n * gp - 1.0) - 1.0 - std::log(static_cast<double>(n))) / (n * kPi));
    const double gf = gamma_prime_fr(n) + opts.gamma_prime_fault;
    worst_fr = std::max(worst_fr, std::abs(gf * gf * n * n - (2.0 * n - 1.0)) / (2.0 * n * n));
  }
  const double g2 = std::abs(gamma_n(2) - (kPi / 2.0 - 2.0 / kPi));
  const bool ok = worst <= 1e-12 && worst_fr <= 1e-12 && g2 <= 1e-8;
  return {ok, "gamma' err=" + fmt(worst, 2) + " fr err=" + fmt(worst_fr, 2) + " gamma_2 err=" + fmt(g2, 2)};
}

// --- 5 ---------------------------------------------------------------------

Outcome inequality_suite(const AcceptanceOptions& opts) {
  Rng rng(opts.seed + 5);
  std::uniform_int_distribution<int> deg(1, 20);
  int checks = 0, violations = 0;
  double min_slack = INFINITY;
  auto expect_le = [&](double lhs, double rhs) {
    ++checks;
    const double slack = rhs - lhs;
    min_slack = std::min(min_slack, slack);
    if (slack < -1e-8) ++violations;
  };
  for (int n = 2; n <= 16; ++n) {
    const double g = gamma_n(n);
    const double gp = gamma_prime_n(n) + opts.gamma_prime_fault;
    const double gp_fr = gamma_prime_fr(n) + opts.gamma_prime_fault;
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = random_real_poly(rng, deg(rng));
      const double sup_f = circle_sup(f).refined;
      const double lip_f = circle_lipschitz(f).refined;

      // circle
      const auto rf = compress(f, n);
      expect_le(spectral_norm(toeplitz_matrix(rf)), sup_f);
      expect_le(spectral_norm(toeplitz_commutator(rf)), lip_f);
      expect_le(circle_sup(f - symbol(rf)).refined, g * lip_f);
      const auto t = random_hermitian_element<ToeplitzElement>(rng, n);
      const double lip_t = spectral_norm(toeplitz_commutator(t));
      expect_le(circle_sup(symbol(t)).refined, spectral_norm(toeplitz_matrix(t)));
      expect_le(circle_lipschitz(symbol(t)).refined, lip_t);
      expect_le(spectral_norm(toeplitz_matrix(t - compress(symbol(t), n))), gp * lip_t);

      // Fejér–Riesz
      const auto kf = fr_compress(f, n);
      expect_le(fr_norm(kf).refined, sup_f);
      expect_le(fr_lipschitz(kf).refined, lip_f);
      expect_le(circle_sup(f - fr_embed(kf)).refined, g * lip_f);
      const auto a = random_hermitian_element<FRElement>(rng, n);
      const double lip_a = fr_lipschitz(a).refined;
      expect_le(circle_sup(fr_embed(a)).refined, fr_norm(a).refined);
      expect_le(circle_lipschitz(fr_embed(a)).refined, lip_a);
      expect_le(fr_norm(fr_compress(fr_embed(a), n) - a).refined, gp_fr * lip_a);
    }
  }
  return {violations == 0, std::to_string(checks) + " checks, " + std::to_string(violations) +
                               " violations, min slack " + fmt(min_slack, 3)};
}

// --- 6 ---------------------------------------------------------------------

Outcome fuzzy_structure(const AcceptanceOptions& opts) {
  double comm = 0.0, casimir = 0.0, unit = 0.0, heat = 0.0, duality = 0.0, multiplier = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const Su2Rep rep(n);
    const double j = rep.spin();
    for (int a = 1; a <= 3; ++a) {
      const int b = a % 3 + 1, c = b % 3 + 1;
      comm = std::max(comm, (commutator(rep.J(a), rep.J(b)) - rep.J(c) * cplx{0.0, 1.0}).max_abs());
    }
    const CMatrix cas = rep.J(1) * rep.J(1) + rep.J(2) * rep.J(2) + rep.J(3) * rep.J(3);
    casimir = std::max(casimir, (cas - CMatrix::identity(static_cast<std::size_t>(n)) * cplx{j * (j + 1.0), 0.0}).max_abs());
    const auto one = berezin_quantize(SphereFunction::constant(1.0), rep);
    unit = std::max(unit, (one.matrix() - CMatrix::identity(static_cast<std::size_t>(n))).max_abs());
    double total = 0.0;
    for (const auto& node : sphere_quadrature_for_degree(2 * n).nodes)
      total += node.weight * heat_measure(rep, {node.theta, node.phi});
    heat = std::max(heat, std::abs(total - 1.0));
  }

  Rng rng(opts.seed + 6);
  for (int pair = 0; pair < 100; ++pair) {
    const int n = 1 + pair % 8;
    const int degree = pair % 5;
    const Su2Rep rep(n);
    const auto f = random_real_function(rng, degree);
    const FuzzyOperator op(rep, random_hermitian(rng, n));
    const auto fq = berezin_quantize(f, rep);
    cplx lhs{};
    for (const auto& node : sphere_quadrature_for_degree(degree + 2 * n).nodes) {
      const SpherePoint q{node.theta, node.phi};
      lhs += node.weight * std::conj(f(q)) * berezin_symbol(op, q);
    }
    const cplx rhs = trace(fq.matrix().adjoint() * op.matrix()) / static_cast<double>(n);
    duality = std::max(duality, std::abs(lhs - rhs));
  }

  // Funk–Hecke: the transform multiplies Y_lm by int H_P P_l(cos theta)
  const auto gl = gauss_legendre(64);
  for (int n : {1, 2, 3, 6, 10}) {
    const Su2Rep rep(n);
    for (int l = 0; l <= 4; ++l) {
      double fh = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        fh += 0.5 * gl.weights[i] * n * std::pow(0.5 * (1.0 + gl.nodes[i]), n - 1) * legendre(l, gl.nodes[i]);
      for (int m = -l; m <= l; ++m) {
        const auto back = berezin_symbol_function(berezin_quantize(SphereFunction::harmonic(l, m), rep));
        for (int ll = 0; ll <= back.max_degree(); ++ll)
          for (int mm = -ll; mm <= ll; ++mm) {
            const cplx expect = (ll == l && mm == m) ? cplx{fh} : cplx{};
            multiplier = std::max(multiplier, std::abs(back.coeff(ll, mm) - expect));
          }
      }
    }
  }
  const bool ok = comm <= 1e-10 && casimir <= 1e-10 && unit <= 1e-8 && heat <= 1e-8 && duality <= 1e-8 &&
                  multiplier <= 1e-6;
  return {ok, "su(2)=" + fmt(comm, 2) + " casimir=" + fmt(casimir, 2) + " unit=" + fmt(unit, 2) +
                  " heat=" + fmt(heat, 2) + " duality=" + fmt(duality, 2) + " multiplier=" + fmt(multiplier, 2)};
}

// --- 7 ---------------------------------------------------------------------

Outcome fuzzy_convergence(const AcceptanceOptions& opts) {
  std::vector<double> g;
  for (int n = 1; n <= 16; ++n) g.push_back(gamma_sphere(Su2Rep(n)));
  bool decreasing = true;
  for (std::size_t i = 1; i < g.size(); ++i) decreasing = decreasing && g[i] < g[i - 1];
  const double quarter = g.back() / g.front();

  std::vector<double> q;
  for (int n = 2; n <= 10; ++n) q.push_back(max_quantization_ratio(n, 100, opts.seed + 7));
  bool q_decreasing = true;
  for (std::size_t i = 1; i < q.size(); ++i) q_decreasing = q_decreasing && q[i] < q[i - 1];

  const bool ok = decreasing && quarter < 0.25 && q_decreasing;
  return {ok, std::string("gamma_sphere decreasing=") + (decreasing ? "yes" : "no") +
                  " gamma(16)/gamma(1)=" + fmt(quarter, 4) + " (need < 0.25) quant ratio n=2: " + fmt(q.front(), 4) +
                  " n=3: " + fmt(q[1], 4) + " n=10: " + fmt(q.back(), 4) +
                  " monotone=" + (q_decreasing ? "yes" : "no")};
}

// --- 8 ---------------------------------------------------------------------

struct SoundnessReport {
  double oracle_gap = 0.0;  // max(oracle - value)
  double residual = 0.0;
  double symmetry = 0.0;
  double triangle = 0.0;
};

void soundness(const OperatorSystem& sys, const std::function<State(Rng&)>& draw, Rng& rng, std::uint64_t seed,
               SoundnessReport& r) {
  DistanceOptions o;
  o.oracle_samples = 64;
  for (int pair = 0; pair < 50; ++pair) {
    o.seed = seed + static_cast<std::uint64_t>(pair);
    const State a = draw(rng), b = draw(rng), c = draw(rng);
    const auto ab = connes_distance(sys, a, b, o);
    const auto ba = connes_distance(sys, b, a, o);
    const auto ac = connes_distance(sys, a, c, o);
    const auto cb = connes_distance(sys, c, b, o);
    for (const auto* d : {&ab, &ba, &ac, &cb}) {
      r.oracle_gap = std::max(r.oracle_gap, d->oracle_lower_bound - d->value);
      r.residual = std::max(r.residual, d->feasibility_residual);
    }
    r.symmetry = std::max(r.symmetry, std::abs(ab.value - ba.value));
    r.triangle = std::max(r.triangle, ab.value - ac.value - cb.value);
  }
}

Outcome solver_soundness(const AcceptanceOptions& opts) {
  Rng rng(opts.seed + 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ok = true;
  std::ostringstream detail;
  auto report = [&](const char* name, const SoundnessReport& r) {
    ok = ok && r.oracle_gap <= 1e-4 && r.residual <= 1e-4 && r.symmetry <= 2e-4 && r.triangle <= 3e-4;
    detail << name << ": oracle-gap=" << fmt(r.oracle_gap, 2) << " residual=" << fmt(r.residual, 2)
           << " symmetry=" << fmt(r.symmetry, 2) << " triangle=" << fmt(r.triangle, 2) << "; ";
  };
  {
    SoundnessReport r;
    soundness(ToeplitzSystem(5), [](Rng& g) { return State::toeplitz_density(random_density(g, 5)); }, rng,
              opts.seed, r);
    report("toeplitz n=5", r);
  }
  {
    SoundnessReport r;
    soundness(
        FejerRieszSystem(3),
        [&u](Rng& g) {
          std::vector<double> w(3), x(3);
          for (auto& v : w) v = u(g);
          for (auto& v : x) v = 2.0 * kPi * u(g);
          return State::fejer_riesz_mixture(w, x, 3);
        },
        rng, opts.seed, r);
    report("fejer-riesz n=3", r);
  }
  {
    SoundnessReport r;
    soundness(FuzzySystem(Su2Rep(4)), [](Rng& g) { return State::fuzzy_density(random_density(g, 4)); }, rng,
              opts.seed, r);
    report("fuzzy n=4", r);
  }
  return {ok, detail.str()};
}

// --- 9 ---------------------------------------------------------------------

Outcome distortion(const AcceptanceOptions& opts) {
  constexpr int n = 5;
  Rng rng(opts.seed + 9);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  // five evaluation states pulled back by the symbol map, five random density
  // matrices matched with their pushforward measures
  std::vector<State> states;
  std::vector<CircleMeasure> limits;
  std::vector<std::optional<double>> points;
  for (int i = 0; i < 5; ++i) {
    const double x = u(rng);
    states.push_back(State::symbol_pullback(x, n));
    limits.push_back(CircleMeasure::point(x));
    points.emplace_back(x);
  }
  for (int i = 0; i < 5; ++i) {
    states.push_back(State::toeplitz_density(random_density(rng, n)));
    limits.push_back(CircleMeasure::from_toeplitz(states.back()));
    points.emplace_back(std::nullopt);
  }
  const ToeplitzSystem sys(n);
  std::vector<DistortionSample> pairs;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double dn = connes_distance(sys, states[i], states[j], quiet_options()).value;
      const double d = points[i] && points[j] ? exact_circle_distance(*points[i], *points[j])
                                              : circle_wasserstein(limits[i], limits[j]);
      pairs.push_back({dn, d});
    }
  const double est = distortion_estimate(pairs);
  const double bound = 2.0 * gamma_n(n) + 2.0 * (gamma_prime_n(n) + opts.gamma_prime_fault) + 1e-3;
  return {est <= bound, "distortion " + fmt(est, 6) + " <= " + fmt(bound, 6) + " over " +
                            std::to_string(pairs.size()) + " pairs"};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)(const AcceptanceOptions&);
};

constexpr Criterion kCriteria[] = {
    {1, "closed-form distances at n=2", closed_forms},
    {2, "Toeplitz distance band, n in {3,5,9}", toeplitz_band},
    {3, "Fejér–Riesz distance band, n in {2,3}", fr_band},
    {4, "error-constant formulas", error_constants},
    {5, "circle and Fejér–Riesz contraction and approximation inequalities", inequality_suite},
    {6, "fuzzy-sphere structure", fuzzy_structure},
    {7, "fuzzy-sphere convergence", fuzzy_convergence},
    {8, "solver soundness", solver_soundness},
    {9, "Toeplitz distortion bound at n=5", distortion},
};

}  // namespace

double max_quantization_ratio(int n, int samples, std::uint64_t seed) {
  if (n == 1) return 0.0;
  const Su2Rep rep(n);
  const auto quad = sphere_quadrature_for_degree(2 * (n - 1) + 2 * n);
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const FuzzyOperator t(rep, random_hermitian(rng, n));
    const auto back = berezin_quantize(berezin_symbol_function(t), rep, quad);
    const double lip = spectral_norm(fuzzy_commutator(t));
    if (lip > 0.0) worst = std::max(worst, spectral_norm(t.matrix() - back.matrix()) / lip);
  }
  return worst;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end()) continue;
    if (opts.log) *opts.log << "# criterion " << c.id << ": " << c.title << '\n' << std::flush;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(opts);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    out.push_back({c.id, c.title, o.passed, o.detail, seconds_since(t0)});
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " + r.detail +
         " (" + secs + " s)";
}

}  // namespace spectrunc::cli
