#include "spectrunc/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spectrunc {

FRElement::FRElement(int n) : LaurentSeries(n - 1) {
  if (n < 1) throw std::invalid_argument("FRElement: n must be >= 1");
}

FRElement::FRElement(int n, std::vector<cplx> coeffs) : LaurentSeries(n - 1, std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("FRElement: n must be >= 1");
}

FRElement FRElement::identity(int n) {
  FRElement a(n);
  a.set(0, 1.0);
  return a;
}

FRElement FRElement::adjoint() const {
  FRElement out(support_bound());
  for (int k = -bound(); k <= bound(); ++k) out.set(k, std::conj(coeff(-k)));
  return out;
}

bool FRElement::is_positive(double tol, int grid_size) const {
  if (!is_hermitian()) return false;
  if (grid_size == 0) grid_size = default_grid_size(bound());
  const auto values = trig_grid_values(coeffs(), grid_size);
  double lo = INFINITY;
  for (const auto& v : values) lo = std::min(lo, v.real());
  // p - lo >= 0 on the grid; between nodes p can dip by at most
  // (pi K / m) * sup|p - c| for any constant c
  const auto sup = trig_sup(coeffs(), grid_size);
  const double margin = (sup.bernstein_factor - 1.0) * sup.certified();
  if (lo - margin >= -tol) return true;
  // Inconclusive, e.g. a minimum that touches zero: polish the minimum as the
  // sup of |c - p| with c the grid maximum.
  double hi = -INFINITY;
  for (const auto& v : values) hi = std::max(hi, v.real());
  std::vector<cplx> shifted(coeffs().begin(), coeffs().end());
  shifted[static_cast<std::size_t>(bound())] -= hi;
  return hi - trig_sup(shifted, grid_size).refined >= -tol;
}

FRElement& FRElement::operator-=(const FRElement& rhs) {
  if (rhs.support_bound() != support_bound()) throw std::invalid_argument("FRElement: size mismatch");
  add_scaled(rhs, -1.0);
  return *this;
}

FRElement operator-(FRElement a, const FRElement& b) { return a -= b; }

FourierPoly fr_embed(const FRElement& a) {
  return FourierPoly(a.bound(), std::vector<cplx>(a.coeffs().begin(), a.coeffs().end()));
}

FRElement fr_compress(const FourierPoly& f, int n) {
  FRElement a(n);
  for (int k = -(n - 1); k <= n - 1; ++k)
    a.set(k, (1.0 - static_cast<double>(std::abs(k)) / n) * f.coeff(k));
  return a;
}

SupEstimate fr_norm(const FRElement& a, int grid_size) {
  if (grid_size == 0) grid_size = default_grid_size(a.bound());
  return trig_sup(a.coeffs(), grid_size);
}

SupEstimate fr_lipschitz(const FRElement& a, int grid_size) {
  if (grid_size == 0) grid_size = default_grid_size(a.bound());
  std::vector<cplx> dc(a.coeffs().size());
  for (int k = -a.bound(); k <= a.bound(); ++k) dc[k + a.bound()] = static_cast<double>(k) * a.coeff(k);
  return trig_sup(dc, grid_size);
}

double gamma_prime_fr(int n) {
  if (n < 1) throw std::invalid_argument("gamma_prime_fr: n must be >= 1");
  return std::sqrt(2.0 * n - 1.0) / n;
}

}  // namespace spectrunc
