#ifndef SPECTRUNC_CIRCLE_HPP
#define SPECTRUNC_CIRCLE_HPP

// Spectral truncation of the circle: the Toeplitz operator system C(S^1)^(n)
// acting on span{e_1, ..., e_n}, e_k(x) = e^{ikx}, with D = -i d/dx.
//
// The pair of channels is
//   compress (R_n): f  -> P_n f P_n,        a_k = b_k for |k| < n
//   symbol   (S_n): T  -> x -> <psi, alpha_x(T) psi>,
//                          coefficient k is (1 - |k|/n) a_k
// so symbol(compress(f)) is the Fejér mean F_n * f.

#include "spectrunc/linalg.hpp"
#include "spectrunc/trig.hpp"

namespace spectrunc {

/// f(x) = sum_{|k| <= K} b_k e^{ikx}, x in radians.
class FourierPoly : public LaurentSeries {
 public:
  FourierPoly() = default;
  explicit FourierPoly(int degree) : LaurentSeries(degree) {}
  FourierPoly(int degree, std::vector<cplx> coeffs) : LaurentSeries(degree, std::move(coeffs)) {}

  static FourierPoly constant(double c);
  static FourierPoly mode(int k, cplx c = 1.0);

  int degree() const { return bound(); }
  bool is_real(double tol = 1e-12) const { return is_self_adjoint(tol); }
  cplx operator()(double x) const { return evaluate(x); }

  /// f'(x): coefficients i k b_k.
  FourierPoly derivative() const;

  FourierPoly& operator+=(const FourierPoly& rhs);
  FourierPoly& operator-=(const FourierPoly& rhs);
};

FourierPoly operator+(FourierPoly a, const FourierPoly& b);
FourierPoly operator-(FourierPoly a, const FourierPoly& b);

/// Element of the Toeplitz operator system, T_kl = a_{k-l} for k, l in [1, n].
class ToeplitzElement : public LaurentSeries {
 public:
  ToeplitzElement() : ToeplitzElement(1) {}
  explicit ToeplitzElement(int n);
  ToeplitzElement(int n, std::vector<cplx> coeffs);

  static ToeplitzElement identity(int n);

  int size() const { return bound() + 1; }
  bool is_hermitian(double tol = 1e-12) const { return is_self_adjoint(tol); }

  ToeplitzElement& operator-=(const ToeplitzElement& rhs);
};

ToeplitzElement operator-(ToeplitzElement a, const ToeplitzElement& b);

/// F_n(x) = (1/n) sin^2(nx/2) / sin^2(x/2), with the value n at x = 0 mod 2 pi.
double fejer_kernel(int n, double x);

ToeplitzElement compress(const FourierPoly& f, int n);
FourierPoly symbol(const ToeplitzElement& t);

CMatrix toeplitz_matrix(const ToeplitzElement& t);

/// [P D P, T], the Toeplitz matrix with entries (k - l) a_{k-l}.
CMatrix toeplitz_commutator(const ToeplitzElement& t);

/// sup |f| and sup |f'| = ||[D, f]||. grid_size 0 selects default_grid_size.
SupEstimate circle_sup(const FourierPoly& f, int grid_size = 0);
SupEstimate circle_lipschitz(const FourierPoly& f, int grid_size = 0);

/// (1/2pi) int_{-pi}^{pi} F_n(y) |y| dy by composite Simpson on [0, pi].
/// quad_points 0 selects max(4096, 64 n).
double gamma_n(int n, int quad_points = 0);

/// (2/n)(1 + (1 + log n)/pi).
double gamma_prime_n(int n);

}  // namespace spectrunc

#endif  // SPECTRUNC_CIRCLE_HPP
