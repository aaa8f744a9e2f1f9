#ifndef SPECTRUNC_METRIC_HPP
#define SPECTRUNC_METRIC_HPP

// Connes distance d(phi, psi) = sup { |phi(x) - psi(x)| : ||[D, x]|| <= 1 }.
//
// The sup may be taken over Hermitian x: ||[D, x*]|| = ||[D, x]||, and
// multiplying x by a phase makes phi(x) - psi(x) real and nonnegative, after
// which its Hermitian part has the same value and no larger seminorm.
// Identity components are gauged away since [D, 1] = 0 and phi(1) = psi(1).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectrunc/circle.hpp"
#include "spectrunc/fejer_riesz.hpp"
#include "spectrunc/fuzzy_sphere.hpp"
#include "spectrunc/solver.hpp"
#include "spectrunc/state.hpp"

namespace spectrunc {

/// Real coordinates y of Hermitian elements modulo C1, and the maps the
/// distance program needs. Toeplitz and Fejér–Riesz use
///   y_{2(k-1)} = Re a_k,  y_{2k-1} = Im a_k,  k = 1..n-1,  a_{-k} = conj(a_k);
/// the fuzzy sphere uses a Hilbert–Schmidt orthonormal traceless basis.
class OperatorSystem {
 public:
  virtual ~OperatorSystem() = default;

  virtual SystemKind kind() const = 0;
  virtual int size() const = 0;
  virtual std::size_t dimension() const = 0;

  /// (Re phi(x_1), ..., Re phi(x_d)) on the Hermitian basis: phi(x(y)) = sum_i y_i phi(x_i).
  virtual std::vector<double> functional(const State& s) const = 0;

  /// Constraint data of the program; the objective is left empty.
  virtual LipschitzProgram constraints() const = 0;

  /// ||[D, x(y)]|| evaluated through the module's own element type.
  virtual double lipschitz_norm(std::span<const double> y) const = 0;

  /// phi(x(y)) evaluated through the module's own element type.
  virtual cplx evaluate(const State& s, std::span<const double> y) const = 0;
};

class ToeplitzSystem final : public OperatorSystem {
 public:
  explicit ToeplitzSystem(int n);
  SystemKind kind() const override { return SystemKind::toeplitz; }
  int size() const override { return n_; }
  std::size_t dimension() const override { return static_cast<std::size_t>(2 * (n_ - 1)); }
  std::vector<double> functional(const State& s) const override;
  LipschitzProgram constraints() const override;
  double lipschitz_norm(std::span<const double> y) const override;
  cplx evaluate(const State& s, std::span<const double> y) const override;

  ToeplitzElement element(std::span<const double> y) const;

 private:
  int n_;
};

/// The sup-norm constraint is imposed at grid_size uniform points; the
/// solution is then rescaled by the polished true sup, so the reported
/// distance is attained by a feasible element.
class FejerRieszSystem final : public OperatorSystem {
 public:
  explicit FejerRieszSystem(int n, int grid_size = 0);
  SystemKind kind() const override { return SystemKind::fejer_riesz; }
  int size() const override { return n_; }
  int grid_size() const { return grid_; }
  std::size_t dimension() const override { return static_cast<std::size_t>(2 * (n_ - 1)); }
  std::vector<double> functional(const State& s) const override;
  LipschitzProgram constraints() const override;
  double lipschitz_norm(std::span<const double> y) const override;
  cplx evaluate(const State& s, std::span<const double> y) const override;

  FRElement element(std::span<const double> y) const;

 private:
  int n_;
  int grid_;
};

class FuzzySystem final : public OperatorSystem {
 public:
  explicit FuzzySystem(Su2Rep rep);
  SystemKind kind() const override { return SystemKind::fuzzy; }
  int size() const override { return rep_.dim(); }
  std::size_t dimension() const override { return basis_.size(); }
  std::vector<double> functional(const State& s) const override;
  LipschitzProgram constraints() const override;
  double lipschitz_norm(std::span<const double> y) const override;
  cplx evaluate(const State& s, std::span<const double> y) const override;

  const Su2Rep& rep() const { return rep_; }
  FuzzyOperator element(std::span<const double> y) const;

 private:
  Su2Rep rep_;
  std::vector<CMatrix> basis_;
};

struct DistanceResult {
  double value = 0.0;
  std::vector<double> optimizer;
  double feasibility_residual = 0.0;  // (||[D, x*]|| - 1)_+
  int iterations = 0;
  double oracle_lower_bound = 0.0;
  std::optional<double> upper_bound;  // from the duality gap, when the method provides one
};

struct DistanceOptions {
  SolveOptions solver;
  int oracle_samples = 64;
  std::uint64_t seed = 42;
};

DistanceResult connes_distance(const OperatorSystem& sys, const State& phi, const State& psi,
                               const DistanceOptions& opts = {});

/// Max of |phi(x) - psi(x)| over random Hermitian x rescaled to ||[D, x]|| = 1.
double distance_oracle(const OperatorSystem& sys, const State& phi, const State& psi, int samples,
                       std::uint64_t seed);

/// S_n^*(ev_x) on the Toeplitz system.
inline State state_pullback_symbol(double x, int n) { return State::symbol_pullback(x, n); }

/// phi o R_n restricted to trigonometric polynomials of degree < n, as a
/// Fejér–Riesz moment state; distances on FejerRieszSystem(n) are then
/// distances over degree-(n-1) Lipschitz functions.
State compression_pullback(const State& toeplitz_state);

/// Arc-length distance on the circle.
double exact_circle_distance(double x, double y);

/// d_limit - 2 gamma <= d_truncated <= d_limit + margin.
bool sandwich_check(double d_truncated, double d_limit, double gamma, double margin = 1e-3);

struct DistortionSample {
  double truncated;
  double limit;
};

/// max |truncated - limit|, zero for an empty list.
double distortion_estimate(std::span<const DistortionSample> pairs);

/// gamma + gamma', half the distortion bound 2 gamma + 2 gamma'.
double gh_upper_bound(double gamma, double gamma_prime);

/// Probability measure on the circle: point masses plus an absolutely
/// continuous part with density (1/2pi) sum_k m_k e^{-ikx}, |k| <= K.
struct CircleMeasure {
  std::vector<std::pair<double, double>> atoms;  // (position, mass)
  std::vector<cplx> moments;                     // index k + K, may be empty

  static CircleMeasure point(double x);
  /// R_n^*(phi) for a Toeplitz state; its moments are phi(E_k), E_k the k-th diagonal.
  static CircleMeasure from_toeplitz(const State& s);

  double total_mass() const;
  /// Mass of [0, x), x in [0, 2pi].
  double cdf(double x) const;
};

/// Wasserstein-1 distance for arc length: min_alpha int |F - G - alpha|,
/// midpoint rule on grid_size cells.
double circle_wasserstein(const CircleMeasure& mu, const CircleMeasure& nu, int grid_size = 1 << 15);

}  // namespace spectrunc

#endif  // SPECTRUNC_METRIC_HPP
