#include "spectrunc/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectrunc {

LaurentSeries::LaurentSeries(int bound) : bound_(bound), coeffs_(2 * bound + 1) {
  if (bound < 0) throw std::invalid_argument("LaurentSeries: negative bound");
}

LaurentSeries::LaurentSeries(int bound, std::vector<cplx> coeffs)
    : bound_(bound), coeffs_(std::move(coeffs)) {
  if (bound < 0 || coeffs_.size() != static_cast<std::size_t>(2 * bound + 1))
    throw std::invalid_argument("LaurentSeries: expected 2K+1 coefficients");
}

cplx LaurentSeries::coeff(int k) const {
  if (k < -bound_ || k > bound_) return {};
  return coeffs_[static_cast<std::size_t>(k + bound_)];
}

void LaurentSeries::set(int k, cplx value) {
  if (k < -bound_ || k > bound_) throw std::out_of_range("LaurentSeries::set: index outside support");
  coeffs_[static_cast<std::size_t>(k + bound_)] = value;
}

bool LaurentSeries::is_self_adjoint(double tol) const {
  for (int k = 0; k <= bound_; ++k)
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  return true;
}

cplx LaurentSeries::evaluate(double x) const {
  cplx sum{};
  for (int k = -bound_; k <= bound_; ++k) sum += coeff(k) * std::polar(1.0, k * x);
  return sum;
}

void LaurentSeries::add_scaled(const LaurentSeries& other, cplx scale) {
  if (other.bound_ > bound_) {
    std::vector<cplx> grown(2 * other.bound_ + 1);
    for (int k = -bound_; k <= bound_; ++k) grown[k + other.bound_] = coeff(k);
    coeffs_ = std::move(grown);
    bound_ = other.bound_;
  }
  for (int k = -other.bound_; k <= other.bound_; ++k)
    coeffs_[static_cast<std::size_t>(k + bound_)] += scale * other.coeff(k);
}

int default_grid_size(int degree) { return std::max(4096, 64 * degree); }

double bernstein_factor(int degree, int grid_size) {
  const double r = std::numbers::pi * degree / grid_size;
  if (r >= 1.0) return INFINITY;
  return 1.0 / (1.0 - r);
}

std::vector<cplx> trig_grid_values(std::span<const cplx> coeffs, int grid_size) {
  const int bound = static_cast<int>(coeffs.size() / 2);
  std::vector<cplx> values(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) {
    const double x = 2.0 * std::numbers::pi * j / grid_size;
    // Horner in z = e^{ix}, then shift by z^{-K}
    const cplx z = std::polar(1.0, x);
    cplx acc{};
    for (int k = bound; k >= -bound; --k) acc = acc * z + coeffs[k + bound];
    values[j] = acc * std::polar(1.0, -bound * x);
  }
  return values;
}

namespace {

double abs_at(std::span<const cplx> coeffs, double x) {
  const int bound = static_cast<int>(coeffs.size() / 2);
  const cplx z = std::polar(1.0, x);
  cplx acc{};
  for (int k = bound; k >= -bound; --k) acc = acc * z + coeffs[k + bound];
  return std::abs(acc);
}

double golden_max(std::span<const cplx> coeffs, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = abs_at(coeffs, c);
  double fd = abs_at(coeffs, d);
  for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = abs_at(coeffs, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = abs_at(coeffs, d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

SupEstimate trig_sup(std::span<const cplx> coeffs, int grid_size) {
  if (coeffs.size() % 2 != 1) throw std::invalid_argument("trig_sup: expected 2K+1 coefficients");
  const int degree = static_cast<int>(coeffs.size() / 2);
  if (grid_size <= std::numbers::pi * degree)
    throw std::invalid_argument("trig_sup: grid too coarse for the degree");

  SupEstimate out;
  out.grid_size = grid_size;
  out.degree = degree;
  out.bernstein_factor = bernstein_factor(degree, grid_size);

  const auto values = trig_grid_values(coeffs, grid_size);
  std::vector<double> mags(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) mags[j] = std::abs(values[j]);
  out.grid_max = *std::max_element(mags.begin(), mags.end());
  out.refined = out.grid_max;
  if (out.grid_max == 0.0) return out;

  // Only grid points within the Bernstein margin can sit next to the true max.
  const double cutoff = out.grid_max / out.bernstein_factor;
  const double h = 2.0 * std::numbers::pi / grid_size;
  const int m = grid_size;
  std::vector<int> candidates;
  for (int j = 0; j < m; ++j) {
    const double v = mags[j];
    if (v < cutoff) continue;
    if (v >= mags[(j + m - 1) % m] && v >= mags[(j + 1) % m]) candidates.push_back(j);
  }
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) { return mags[a] > mags[b]; });
  if (candidates.size() > 32) candidates.resize(32);
  for (int j : candidates) {
    const double x = h * j;
    out.refined = std::max(out.refined, golden_max(coeffs, x - h, x + h));
  }
  return out;
}

}  // namespace spectrunc
