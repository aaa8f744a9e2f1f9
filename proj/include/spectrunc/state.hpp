#ifndef SPECTRUNC_STATE_HPP
#define SPECTRUNC_STATE_HPP

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "spectrunc/circle.hpp"
#include "spectrunc/fejer_riesz.hpp"
#include "spectrunc/fuzzy_sphere.hpp"
#include "spectrunc/linalg.hpp"
#include "spectrunc/sphere_function.hpp"

namespace spectrunc {

enum class SystemKind { toeplitz, fejer_riesz, fuzzy };

std::string_view to_string(SystemKind kind);

/// Evaluation point a state was pulled back from, when it was.
struct CirclePoint {
  double x;
};
using StateOrigin = std::variant<std::monostate, CirclePoint, SpherePoint>;

/// Positive unital functional on one of the three operator systems.
///
/// Toeplitz and fuzzy states are density matrices, phi(T) = tr(rho T).
/// Fejér–Riesz states are moment sequences m_k = phi(e^{ikx}), |k| < n, which
/// is how a probability measure on the circle restricts to the system.
class State {
 public:
  /// S_n^*(ev_x): the vector state of psi_x = n^{-1/2} (e^{-ikx})_{k=1..n}.
  static State symbol_pullback(double x, int n);
  static State toeplitz_density(CMatrix rho);

  /// L_n^*(ev_x), m_k = e^{ikx}.
  static State embed_pullback(double x, int n);
  /// Mixture of point evaluations; weights are normalised to sum 1.
  static State fejer_riesz_mixture(std::span<const double> weights, std::span<const double> points, int n);
  static State fejer_riesz_moments(std::vector<cplx> moments);

  /// sigma^*(ev_p): the coherent-state projector alpha_p(P).
  static State berezin_pullback(const Su2Rep& rep, const SpherePoint& p);
  static State fuzzy_density(CMatrix rho);

  SystemKind kind() const { return kind_; }
  int size() const { return n_; }
  const StateOrigin& origin() const { return origin_; }

  /// Density matrix (Toeplitz / fuzzy); throws for Fejér–Riesz states.
  const CMatrix& density() const;
  /// m_k for k in (-n, n), index k + n - 1 (Toeplitz / Fejér–Riesz).
  std::vector<cplx> moments() const;

  cplx operator()(const ToeplitzElement& t) const;
  cplx operator()(const FRElement& a) const;
  cplx operator()(const FuzzyOperator& t) const;

  /// Unital to tol and positive: rho PSD (eigenvalues >= -tol), or for
  /// moment states the moment Toeplitz matrix (m_{k-l}) is PSD.
  bool is_valid(double tol = 1e-9) const;

 private:
  State(SystemKind kind, int n, std::variant<CMatrix, std::vector<cplx>> repr, StateOrigin origin = {});

  SystemKind kind_;
  int n_;
  std::variant<CMatrix, std::vector<cplx>> repr_;
  StateOrigin origin_;
};

}  // namespace spectrunc

#endif  // SPECTRUNC_STATE_HPP
