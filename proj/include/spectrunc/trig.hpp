#ifndef SPECTRUNC_TRIG_HPP
#define SPECTRUNC_TRIG_HPP

// Laurent coefficient storage and certified sup-norms of trigonometric
// polynomials, shared by the circle and Fejér–Riesz modules.

#include <complex>
#include <span>
#include <vector>

#include "spectrunc/linalg.hpp"

namespace spectrunc {

/// Coefficients c_k for k in [-K, K], stored at index k + K.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  explicit LaurentSeries(int bound);
  LaurentSeries(int bound, std::vector<cplx> coeffs);

  /// K: the largest |k| that may carry a nonzero coefficient.
  int bound() const { return bound_; }
  cplx coeff(int k) const;
  void set(int k, cplx value);
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// c_{-k} = conj(c_k) for all k, i.e. the series is real-valued / self-adjoint.
  bool is_self_adjoint(double tol = 1e-12) const;

  cplx evaluate(double x) const;

 protected:
  void add_scaled(const LaurentSeries& other, cplx scale);

 private:
  int bound_ = 0;
  std::vector<cplx> coeffs_ = std::vector<cplx>(1);
};

/// Sup-norm of a trigonometric polynomial of degree K on a uniform grid of m
/// points. Bernstein's inequality ||p'|| <= K ||p|| gives
/// sup|p| <= grid_max / (1 - pi K / m), so grid_max * factor is certified.
struct SupEstimate {
  double grid_max = 0.0;
  double refined = 0.0;  // grid maximum polished by local golden-section search
  double bernstein_factor = 1.0;
  int grid_size = 0;
  int degree = 0;

  double certified() const { return grid_max * bernstein_factor; }
};

int default_grid_size(int degree);
double bernstein_factor(int degree, int grid_size);

/// Evaluates sum_k c_k e^{ikx} at x_j = 2 pi j / m, j = 0..m-1.
std::vector<cplx> trig_grid_values(std::span<const cplx> coeffs, int grid_size);

/// coeffs has length 2K+1 (index k + K). Requires grid_size > pi K.
SupEstimate trig_sup(std::span<const cplx> coeffs, int grid_size);

}  // namespace spectrunc

#endif  // SPECTRUNC_TRIG_HPP
