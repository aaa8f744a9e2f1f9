#include "spectrunc/sphere_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectrunc {

SpherePoint SpherePoint::from_cartesian(const std::array<double, 3>& x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (r == 0.0) throw std::invalid_argument("SpherePoint: zero vector");
  SpherePoint p;
  p.theta = std::acos(std::clamp(x[2] / r, -1.0, 1.0));
  p.phi = std::atan2(x[1], x[0]);
  if (p.phi < 0.0) p.phi += 2.0 * std::numbers::pi;
  return p;
}

std::array<double, 3> SpherePoint::cartesian() const {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

double round_distance(const SpherePoint& a, const SpherePoint& b) {
  const auto x = a.cartesian();
  const auto y = b.cartesian();
  const double cross0 = x[1] * y[2] - x[2] * y[1];
  const double cross1 = x[2] * y[0] - x[0] * y[2];
  const double cross2 = x[0] * y[1] - x[1] * y[0];
  const double dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  return std::atan2(std::sqrt(cross0 * cross0 + cross1 * cross1 + cross2 * cross2), dot);
}

namespace {

// Normalised associated Legendre values Pbar_l^m(cos theta) for 0 <= m <= l <= L,
// with Condon–Shortley phase; index l*(l+1)/2 + m.
std::vector<double> legendre_table(int max_degree, double theta) {
  const double x = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<double> p(static_cast<std::size_t>((max_degree + 1) * (max_degree + 2) / 2));
  auto at = [](int l, int m) { return static_cast<std::size_t>(l * (l + 1) / 2 + m); };
  p[at(0, 0)] = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int m = 1; m <= max_degree; ++m)
    p[at(m, m)] = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * p[at(m - 1, m - 1)];
  for (int m = 0; m < max_degree; ++m) p[at(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * p[at(m, m)];
  for (int m = 0; m <= max_degree; ++m) {
    for (int l = m + 2; l <= max_degree; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
      const double b = std::sqrt(((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) /
                                 (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
      p[at(l, m)] = a * (x * p[at(l - 1, m)] - b * p[at(l - 2, m)]);
    }
  }
  return p;
}

// Y_lm for all l <= L, |m| <= l at one point, index l*l + l + m.
std::vector<cplx> harmonic_table(int max_degree, double theta, double phi) {
  const auto p = legendre_table(max_degree, theta);
  std::vector<cplx> y(static_cast<std::size_t>((max_degree + 1) * (max_degree + 1)));
  for (int l = 0; l <= max_degree; ++l) {
    for (int m = 0; m <= l; ++m) {
      const cplx v = p[static_cast<std::size_t>(l * (l + 1) / 2 + m)] * std::polar(1.0, m * phi);
      y[static_cast<std::size_t>(l * l + l + m)] = v;
      if (m > 0) y[static_cast<std::size_t>(l * l + l - m)] = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(v);
    }
  }
  return y;
}

template <class F>
double local_max(const F& g, double theta, double phi, double h_theta, double h_phi) {
  constexpr double kEdge = 1e-9;
  double best = g(theta, phi);
  while (h_theta > 1e-9 || h_phi > 1e-9) {
    bool moved = false;
    const double cand[4][2] = {{theta + h_theta, phi}, {theta - h_theta, phi},
                               {theta, phi + h_phi}, {theta, phi - h_phi}};
    for (const auto& c : cand) {
      const double t = std::clamp(c[0], kEdge, std::numbers::pi - kEdge);
      const double v = g(t, c[1]);
      if (v > best) {
        best = v;
        theta = t;
        phi = c[1];
        moved = true;
      }
    }
    if (!moved) {
      h_theta *= 0.5;
      h_phi *= 0.5;
    }
  }
  return best;
}

template <class F>
double grid_sup(const F& g, int grid) {
  if (grid < 2) throw std::invalid_argument("sphere grid must be >= 2");
  const int nt = grid;
  const int np = 2 * grid;
  const double ht = std::numbers::pi / nt;
  const double hp = 2.0 * std::numbers::pi / np;
  struct Cand {
    double v, t, p;
  };
  std::vector<Cand> cands;
  cands.reserve(static_cast<std::size_t>(nt) * np);
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < np; ++j) {
      const double t = (i + 0.5) * ht;
      const double p = j * hp;
      cands.push_back({g(t, p), t, p});
    }
  const std::size_t keep = std::min<std::size_t>(8, cands.size());
  std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(keep), cands.end(),
                    [](const Cand& a, const Cand& b) { return a.v > b.v; });
  double best = cands.front().v;
  for (std::size_t k = 0; k < keep; ++k)
    best = std::max(best, local_max(g, cands[k].t, cands[k].p, ht, hp));
  return best;
}

}  // namespace

cplx spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("spherical_harmonic: need |m| <= l");
  return harmonic_table(l, theta, phi)[static_cast<std::size_t>(l * l + l + m)];
}

SphereFunction::SphereFunction(int max_degree)
    : max_degree_(max_degree), coeffs_(static_cast<std::size_t>((max_degree + 1) * (max_degree + 1))) {
  if (max_degree < 0) throw std::invalid_argument("SphereFunction: negative degree");
}

SphereFunction SphereFunction::harmonic(int l, int m, cplx c) {
  SphereFunction f(l);
  f.set(l, m, c);
  return f;
}

SphereFunction SphereFunction::constant(double c) {
  SphereFunction f(0);
  f.set(0, 0, c * std::sqrt(4.0 * std::numbers::pi));
  return f;
}

SphereFunction SphereFunction::project(const std::function<cplx(const SpherePoint&)>& f,
                                       int max_degree, const SphereQuadrature& quad) {
  SphereFunction out(max_degree);
  const double area = 4.0 * std::numbers::pi;
  for (const auto& node : quad.nodes) {
    const cplx v = f({node.theta, node.phi});
    const auto y = harmonic_table(max_degree, node.theta, node.phi);
    for (std::size_t i = 0; i < y.size(); ++i) out.coeffs_[i] += area * node.weight * v * std::conj(y[i]);
  }
  return out;
}

cplx SphereFunction::coeff(int l, int m) const {
  if (l < 0 || l > max_degree_ || std::abs(m) > l) return {};
  return coeffs_[static_cast<std::size_t>(l * l + l + m)];
}

void SphereFunction::set(int l, int m, cplx c) {
  if (l < 0 || l > max_degree_ || std::abs(m) > l) throw std::out_of_range("SphereFunction::set: bad (l, m)");
  coeffs_[static_cast<std::size_t>(l * l + l + m)] = c;
}

bool SphereFunction::is_real(double tol) const {
  for (int l = 0; l <= max_degree_; ++l)
    for (int m = 0; m <= l; ++m) {
      const double sign = m % 2 == 0 ? 1.0 : -1.0;
      if (std::abs(coeff(l, -m) - sign * std::conj(coeff(l, m))) > tol) return false;
    }
  return true;
}

cplx SphereFunction::operator()(const SpherePoint& p) const {
  const auto y = harmonic_table(max_degree_, p.theta, p.phi);
  cplx s{};
  for (std::size_t i = 0; i < y.size(); ++i) s += coeffs_[i] * y[i];
  return s;
}

std::array<cplx, 2> SphereFunction::gradient(const SpherePoint& p) const {
  const auto y = harmonic_table(max_degree_ + 1, p.theta, p.phi);
  const double sin_t = std::sin(p.theta);
  const double cot_t = std::cos(p.theta) / sin_t;
  const cplx e_minus = std::polar(1.0, -p.phi);
  auto idx = [](int l, int m) { return static_cast<std::size_t>(l * l + l + m); };
  cplx d_theta{}, d_phi{};
  for (int l = 0; l <= max_degree_; ++l)
    for (int m = -l; m <= l; ++m) {
      const cplx c = coeff(l, m);
      if (c == cplx{}) continue;
      const cplx ylm = y[idx(l, m)];
      cplx dt = static_cast<double>(m) * cot_t * ylm;
      if (m < l) dt += std::sqrt(static_cast<double>((l - m) * (l + m + 1))) * e_minus * y[idx(l, m + 1)];
      d_theta += c * dt;
      d_phi += c * cplx{0.0, static_cast<double>(m)} * ylm / sin_t;
    }
  return {d_theta, d_phi};
}

double SphereFunction::gradient_norm(const SpherePoint& p) const {
  const auto g = gradient(p);
  return std::sqrt(std::norm(g[0]) + std::norm(g[1]));
}

double sphere_sup(const SphereFunction& f, int grid) {
  return grid_sup([&](double t, double p) { return std::abs(f({t, p})); }, grid);
}

double sphere_lipschitz(const SphereFunction& f, int grid) {
  if (f.max_degree() == 0) return 0.0;
  return grid_sup([&](double t, double p) { return f.gradient_norm({t, p}); }, grid);
}

}  // namespace spectrunc
