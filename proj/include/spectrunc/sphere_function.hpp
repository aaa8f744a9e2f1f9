#ifndef SPECTRUNC_SPHERE_FUNCTION_HPP
#define SPECTRUNC_SPHERE_FUNCTION_HPP

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "spectrunc/linalg.hpp"
#include "spectrunc/quadrature.hpp"

namespace spectrunc {

/// Point on the unit sphere, theta in [0, pi] from the north pole (0, 0, 1).
struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;

  static SpherePoint north() { return {}; }
  static SpherePoint from_cartesian(const std::array<double, 3>& x);
  std::array<double, 3> cartesian() const;
};

/// Great-circle distance.
double round_distance(const SpherePoint& a, const SpherePoint& b);

/// Orthonormal complex spherical harmonic (Condon–Shortley phase), normalised
/// so that the integral of |Y_lm|^2 over the unit sphere (area 4 pi) is 1.
cplx spherical_harmonic(int l, int m, double theta, double phi);

/// f = sum_{l <= L, |m| <= l} c_lm Y_lm.
class SphereFunction {
 public:
  SphereFunction() : SphereFunction(0) {}
  explicit SphereFunction(int max_degree);

  static SphereFunction harmonic(int l, int m, cplx c = 1.0);
  static SphereFunction constant(double c);

  /// Projects samples onto harmonics up to max_degree. Exact when the
  /// quadrature integrates degree 2 * max_degree (for band-limited input).
  static SphereFunction project(const std::function<cplx(const SpherePoint&)>& f,
                                int max_degree, const SphereQuadrature& quad);

  int max_degree() const { return max_degree_; }
  cplx coeff(int l, int m) const;
  void set(int l, int m, cplx c);

  /// c_{l,-m} = (-1)^m conj(c_{lm}).
  bool is_real(double tol = 1e-12) const;

  cplx operator()(const SpherePoint& p) const;

  /// Partial derivatives (d/dtheta, (1/sin theta) d/dphi); theta must avoid the poles.
  std::array<cplx, 2> gradient(const SpherePoint& p) const;

  /// Riemannian gradient norm of a real function.
  double gradient_norm(const SpherePoint& p) const;

 private:
  int max_degree_;
  std::vector<cplx> coeffs_;  // index l*l + l + m
};

/// Sup of |f| over a theta x phi product grid (midpoints in theta), polished
/// by local compass search; an under-estimate that converges under refinement.
double sphere_sup(const SphereFunction& f, int grid);

/// ||[D_{S^2}, f]|| = sup |grad f|, computed like sphere_sup.
double sphere_lipschitz(const SphereFunction& f, int grid = 64);

}  // namespace spectrunc

#endif  // SPECTRUNC_SPHERE_FUNCTION_HPP
