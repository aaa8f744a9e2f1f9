#include "spectrunc/circle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectrunc {

FourierPoly FourierPoly::constant(double c) {
  FourierPoly f(0);
  f.set(0, c);
  return f;
}

FourierPoly FourierPoly::mode(int k, cplx c) {
  FourierPoly f(std::abs(k));
  f.set(k, c);
  return f;
}

FourierPoly FourierPoly::derivative() const {
  FourierPoly d(degree());
  for (int k = -degree(); k <= degree(); ++k) d.set(k, cplx{0.0, static_cast<double>(k)} * coeff(k));
  return d;
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& rhs) {
  add_scaled(rhs, 1.0);
  return *this;
}

FourierPoly& FourierPoly::operator-=(const FourierPoly& rhs) {
  add_scaled(rhs, -1.0);
  return *this;
}

FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
FourierPoly operator-(FourierPoly a, const FourierPoly& b) { return a -= b; }

ToeplitzElement::ToeplitzElement(int n) : LaurentSeries(n - 1) {
  if (n < 1) throw std::invalid_argument("ToeplitzElement: n must be >= 1");
}

ToeplitzElement::ToeplitzElement(int n, std::vector<cplx> coeffs)
    : LaurentSeries(n - 1, std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("ToeplitzElement: n must be >= 1");
}

ToeplitzElement ToeplitzElement::identity(int n) {
  ToeplitzElement t(n);
  t.set(0, 1.0);
  return t;
}

ToeplitzElement& ToeplitzElement::operator-=(const ToeplitzElement& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("ToeplitzElement: size mismatch");
  add_scaled(rhs, -1.0);
  return *this;
}

ToeplitzElement operator-(ToeplitzElement a, const ToeplitzElement& b) { return a -= b; }

double fejer_kernel(int n, double x) {
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < 1e-6) {
    double sum = 1.0;
    for (int k = 1; k < n; ++k) sum += 2.0 * (1.0 - static_cast<double>(k) / n) * std::cos(k * x);
    return sum;
  }
  const double num = std::sin(0.5 * n * x);
  return num * num / (n * s * s);
}

ToeplitzElement compress(const FourierPoly& f, int n) {
  ToeplitzElement t(n);
  for (int k = -(n - 1); k <= n - 1; ++k) t.set(k, f.coeff(k));
  return t;
}

FourierPoly symbol(const ToeplitzElement& t) {
  const int n = t.size();
  FourierPoly f(n - 1);
  for (int k = -(n - 1); k <= n - 1; ++k)
    f.set(k, (1.0 - static_cast<double>(std::abs(k)) / n) * t.coeff(k));
  return f;
}

CMatrix toeplitz_matrix(const ToeplitzElement& t) {
  const auto n = static_cast<std::size_t>(t.size());
  CMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      m(k, l) = t.coeff(static_cast<int>(k) - static_cast<int>(l));
  return m;
}

CMatrix toeplitz_commutator(const ToeplitzElement& t) {
  const auto n = static_cast<std::size_t>(t.size());
  CMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const int d = static_cast<int>(k) - static_cast<int>(l);
      m(k, l) = static_cast<double>(d) * t.coeff(d);
    }
  return m;
}

SupEstimate circle_sup(const FourierPoly& f, int grid_size) {
  if (grid_size == 0) grid_size = default_grid_size(f.degree());
  return trig_sup(f.coeffs(), grid_size);
}

SupEstimate circle_lipschitz(const FourierPoly& f, int grid_size) {
  if (grid_size == 0) grid_size = default_grid_size(f.degree());
  if (grid_size < 8 * (f.degree() + 1))
    throw std::invalid_argument("circle_lipschitz: grid_size must be >= 8 (K + 1)");
  return trig_sup(f.derivative().coeffs(), grid_size);
}

double gamma_n(int n, int quad_points) {
  if (n < 1) throw std::invalid_argument("gamma_n: n must be >= 1");
  if (quad_points == 0) quad_points = std::max(4096, 64 * n);
  if (quad_points < 64 * n) throw std::invalid_argument("gamma_n: quad_points must be >= 64 n");
  if (quad_points % 2 != 0) ++quad_points;
  // integrand is even; integrating over [0, pi] keeps it smooth
  const double h = std::numbers::pi / quad_points;
  double sum = 0.0;
  for (int j = 0; j <= quad_points; ++j) {
    const double y = j * h;
    const double w = (j == 0 || j == quad_points) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    sum += w * fejer_kernel(n, y) * y;
  }
  return (sum * h / 3.0) / std::numbers::pi;
}

double gamma_prime_n(int n) {
  if (n < 1) throw std::invalid_argument("gamma_prime_n: n must be >= 1");
  return (2.0 / n) * (1.0 + (1.0 + std::log(static_cast<double>(n))) / std::numbers::pi);
}

}  // namespace spectrunc
