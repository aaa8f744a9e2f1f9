#include "spectrunc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace spectrunc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_dimension(std::span<const double> y, std::size_t d) {
  if (y.size() != d) throw std::invalid_argument("parameter vector has the wrong dimension");
}

void require_kind(const State& s, SystemKind kind, int n) {
  if (s.kind() != kind || s.size() != n) throw std::invalid_argument("state belongs to another system");
}

// Shared by the two circle systems: phi(x_re,k) = 2 Re m_k, phi(x_im,k) = -2 Im m_k.
std::vector<double> moment_functional(const std::vector<cplx>& m, int n) {
  std::vector<double> c(static_cast<std::size_t>(2 * (n - 1)));
  for (int k = 1; k < n; ++k) {
    const cplx mk = m[static_cast<std::size_t>(k + n - 1)];
    c[static_cast<std::size_t>(2 * (k - 1))] = 2.0 * mk.real();
    c[static_cast<std::size_t>(2 * k - 1)] = -2.0 * mk.imag();
  }
  return c;
}

template <class Element>
Element coefficient_element(std::span<const double> y, int n) {
  Element e(n);
  for (int k = 1; k < n; ++k) {
    const cplx a{y[static_cast<std::size_t>(2 * (k - 1))], y[static_cast<std::size_t>(2 * k - 1)]};
    e.set(k, a);
    e.set(-k, std::conj(a));
  }
  return e;
}

}  // namespace

ToeplitzSystem::ToeplitzSystem(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ToeplitzSystem: n must be >= 1");
}

ToeplitzElement ToeplitzSystem::element(std::span<const double> y) const {
  require_dimension(y, dimension());
  return coefficient_element<ToeplitzElement>(y, n_);
}

std::vector<double> ToeplitzSystem::functional(const State& s) const {
  require_kind(s, kind(), n_);
  return moment_functional(s.moments(), n_);
}

LipschitzProgram ToeplitzSystem::constraints() const {
  LipschitzProgram p;
  const std::size_t d = dimension();
  std::vector<double> unit(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::fill(unit.begin(), unit.end(), 0.0);
    unit[i] = 1.0;
    p.generators.push_back(toeplitz_commutator(element(unit)) * cplx{0.0, -1.0});
  }
  return p;
}

double ToeplitzSystem::lipschitz_norm(std::span<const double> y) const {
  return spectral_norm(toeplitz_commutator(element(y)));
}

cplx ToeplitzSystem::evaluate(const State& s, std::span<const double> y) const { return s(element(y)); }

FejerRieszSystem::FejerRieszSystem(int n, int grid_size)
    : n_(n), grid_(grid_size > 0 ? grid_size : default_grid_size(n - 1)) {
  if (n < 1) throw std::invalid_argument("FejerRieszSystem: n must be >= 1");
}

FRElement FejerRieszSystem::element(std::span<const double> y) const {
  require_dimension(y, dimension());
  return coefficient_element<FRElement>(y, n_);
}

std::vector<double> FejerRieszSystem::functional(const State& s) const {
  require_kind(s, kind(), n_);
  return moment_functional(s.moments(), n_);
}

LipschitzProgram FejerRieszSystem::constraints() const {
  // -i [D, x](t) = sum_k 2k (Re a_k sin kt + Im a_k cos kt)
  LipschitzProgram p;
  const std::size_t d = dimension();
  p.samples.resize(static_cast<std::size_t>(grid_) * d);
  for (int j = 0; j < grid_; ++j) {
    const double t = kTwoPi * j / grid_;
    double* row = &p.samples[static_cast<std::size_t>(j) * d];
    for (int k = 1; k < n_; ++k) {
      row[2 * (k - 1)] = 2.0 * k * std::sin(k * t);
      row[2 * k - 1] = 2.0 * k * std::cos(k * t);
    }
  }
  return p;
}

double FejerRieszSystem::lipschitz_norm(std::span<const double> y) const {
  return fr_lipschitz(element(y), grid_).refined;
}

cplx FejerRieszSystem::evaluate(const State& s, std::span<const double> y) const { return s(element(y)); }

FuzzySystem::FuzzySystem(Su2Rep rep) : rep_(std::move(rep)) {
  const auto n = static_cast<std::size_t>(rep_.dim());
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      CMatrix re(n, n), im(n, n);
      re(i, k) = r;
      re(k, i) = r;
      im(i, k) = cplx{0.0, -r};
      im(k, i) = cplx{0.0, r};
      basis_.push_back(std::move(re));
      basis_.push_back(std::move(im));
    }
  for (std::size_t k = 1; k < n; ++k) {
    CMatrix h(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (std::size_t l = 0; l < k; ++l) h(l, l) = s;
    h(k, k) = -static_cast<double>(k) * s;
    basis_.push_back(std::move(h));
  }
}

FuzzyOperator FuzzySystem::element(std::span<const double> y) const {
  require_dimension(y, dimension());
  const auto n = static_cast<std::size_t>(rep_.dim());
  CMatrix m(n, n);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (y[i] != 0.0) m += basis_[i] * cplx{y[i], 0.0};
  return FuzzyOperator(rep_, std::move(m));
}

std::vector<double> FuzzySystem::functional(const State& s) const {
  require_kind(s, kind(), rep_.dim());
  std::vector<double> c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = trace(s.density() * basis_[i]).real();
  return c;
}

LipschitzProgram FuzzySystem::constraints() const {
  LipschitzProgram p;
  for (const auto& b : basis_) p.generators.push_back(fuzzy_commutator(FuzzyOperator(rep_, b)) * cplx{0.0, -1.0});
  return p;
}

double FuzzySystem::lipschitz_norm(std::span<const double> y) const {
  return spectral_norm(fuzzy_commutator(element(y)));
}

cplx FuzzySystem::evaluate(const State& s, std::span<const double> y) const { return s(element(y)); }

DistanceResult connes_distance(const OperatorSystem& sys, const State& phi, const State& psi,
                               const DistanceOptions& opts) {
  const auto a = sys.functional(phi);
  const auto b = sys.functional(psi);
  LipschitzProgram prog = sys.constraints();
  prog.objective.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prog.objective[i] = a[i] - b[i];

  auto sol = solve_lipschitz_program(prog, opts.solver);
  DistanceResult out;
  out.iterations = sol.iterations;
  out.upper_bound = sol.upper_bound;
  if (!sol.y.empty() && std::any_of(sol.y.begin(), sol.y.end(), [](double v) { return v != 0.0; })) {
    double lip = sys.lipschitz_norm(sol.y);
    if (lip > 1.0) {
      for (auto& v : sol.y) v /= lip;
      lip = sys.lipschitz_norm(sol.y);
    }
    out.feasibility_residual = std::max(0.0, lip - 1.0);
    double value = 0.0;
    for (std::size_t i = 0; i < sol.y.size(); ++i) value += prog.objective[i] * sol.y[i];
    out.value = std::max(0.0, value);
  }
  out.optimizer = std::move(sol.y);
  out.oracle_lower_bound =
      opts.oracle_samples > 0 ? distance_oracle(sys, phi, psi, opts.oracle_samples, opts.seed) : 0.0;
  return out;
}

double distance_oracle(const OperatorSystem& sys, const State& phi, const State& psi, int samples,
                       std::uint64_t seed) {
  const std::size_t d = sys.dimension();
  if (d == 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> y(d);
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (auto& v : y) v = normal(rng);
    const double lip = sys.lipschitz_norm(y);
    if (!(lip > 0.0)) continue;
    for (auto& v : y) v /= lip;
    best = std::max(best, std::abs(sys.evaluate(phi, y) - sys.evaluate(psi, y)));
  }
  return best;
}

State compression_pullback(const State& toeplitz_state) {
  if (toeplitz_state.kind() != SystemKind::toeplitz)
    throw std::invalid_argument("compression_pullback: needs a Toeplitz state");
  return State::fejer_riesz_moments(toeplitz_state.moments());
}

double exact_circle_distance(double x, double y) {
  const double d = std::fmod(std::abs(x - y), kTwoPi);
  return std::min(d, kTwoPi - d);
}

bool sandwich_check(double d_truncated, double d_limit, double gamma, double margin) {
  return d_limit - 2.0 * gamma <= d_truncated && d_truncated <= d_limit + margin;
}

double distortion_estimate(std::span<const DistortionSample> pairs) {
  double out = 0.0;
  for (const auto& p : pairs) out = std::max(out, std::abs(p.truncated - p.limit));
  return out;
}

double gh_upper_bound(double gamma, double gamma_prime) { return gamma + gamma_prime; }

CircleMeasure CircleMeasure::point(double x) {
  CircleMeasure m;
  m.atoms.emplace_back(x, 1.0);
  return m;
}

CircleMeasure CircleMeasure::from_toeplitz(const State& s) {
  if (s.kind() != SystemKind::toeplitz) throw std::invalid_argument("CircleMeasure::from_toeplitz: needs a Toeplitz state");
  CircleMeasure m;
  m.moments = s.moments();
  return m;
}

double CircleMeasure::total_mass() const {
  double mass = 0.0;
  for (const auto& [x, w] : atoms) mass += w;
  if (!moments.empty()) mass += moments[moments.size() / 2].real();
  return mass;
}

double CircleMeasure::cdf(double x) const {
  double f = 0.0;
  for (const auto& [a, w] : atoms) {
    double pos = std::fmod(a, kTwoPi);
    if (pos < 0.0) pos += kTwoPi;
    if (pos < x) f += w;
  }
  if (!moments.empty()) {
    // (1/2pi) [m_0 x + sum_{k != 0} m_k (1 - e^{-ikx}) / (ik)]
    const int kmax = static_cast<int>(moments.size() / 2);
    cplx s = moments[static_cast<std::size_t>(kmax)] * x;
    for (int k = -kmax; k <= kmax; ++k) {
      if (k == 0) continue;
      s += moments[static_cast<std::size_t>(k + kmax)] * (1.0 - std::polar(1.0, -k * x)) / cplx{0.0, static_cast<double>(k)};
    }
    f += s.real() / kTwoPi;
  }
  return f;
}

double circle_wasserstein(const CircleMeasure& mu, const CircleMeasure& nu, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("circle_wasserstein: grid too small");
  const double h = kTwoPi / grid_size;
  std::vector<double> diff(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) {
    const double x = (j + 0.5) * h;
    diff[static_cast<std::size_t>(j)] = mu.cdf(x) - nu.cdf(x);
  }
  std::vector<double> sorted = diff;
  auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  const double alpha = *mid;
  double w = 0.0;
  for (double v : diff) w += std::abs(v - alpha);
  return w * h;
}

}  // namespace spectrunc
