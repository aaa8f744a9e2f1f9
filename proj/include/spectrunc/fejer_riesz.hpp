#ifndef SPECTRUNC_FEJER_RIESZ_HPP
#define SPECTRUNC_FEJER_RIESZ_HPP

// Fejér–Riesz operator system: finitely supported sequences a_k, |k| < n,
// ordered as the trigonometric polynomials sum_k a_k e^{ikx} inside C(S^1).
// Channels: fr_compress (K_n) is the Fejér mean, fr_embed (L_n) the inclusion.

#include "spectrunc/circle.hpp"
#include "spectrunc/trig.hpp"

namespace spectrunc {

class FRElement : public LaurentSeries {
 public:
  FRElement() : FRElement(1) {}
  explicit FRElement(int n);
  FRElement(int n, std::vector<cplx> coeffs);

  static FRElement identity(int n);

  int support_bound() const { return bound() + 1; }

  /// (a*)_k = conj(a_{-k})
  FRElement adjoint() const;
  bool is_hermitian(double tol = 1e-12) const { return is_self_adjoint(tol); }

  /// Positive iff the trigonometric polynomial is >= -tol everywhere. Decided
  /// on the certified grid (min over the grid minus the Bernstein margin), and
  /// when that is inconclusive by the polished minimum.
  bool is_positive(double tol = 1e-9, int grid_size = 0) const;

  FRElement& operator-=(const FRElement& rhs);
};

FRElement operator-(FRElement a, const FRElement& b);

FourierPoly fr_embed(const FRElement& a);
FRElement fr_compress(const FourierPoly& f, int n);

/// Operator norm in C*(Z) = C(S^1): the sup-norm of the polynomial.
SupEstimate fr_norm(const FRElement& a, int grid_size = 0);

/// ||[D, a]|| = sup |sum_k k a_k e^{ikx}|.
SupEstimate fr_lipschitz(const FRElement& a, int grid_size = 0);

/// sqrt(2n - 1) / n.
double gamma_prime_fr(int n);

}  // namespace spectrunc

#endif  // SPECTRUNC_FEJER_RIESZ_HPP
