#include "spectrunc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectrunc {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pn1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

int SphereQuadrature::exact_degree() const { return std::min(2 * theta_nodes - 1, phi_nodes - 1); }

SphereQuadrature sphere_quadrature(int theta_nodes, int phi_nodes) {
  if (theta_nodes < 1 || phi_nodes < 1) throw std::invalid_argument("sphere_quadrature: node counts must be >= 1");
  SphereQuadrature q;
  q.theta_nodes = theta_nodes;
  q.phi_nodes = phi_nodes;
  const auto gl = gauss_legendre(theta_nodes);
  q.nodes.reserve(static_cast<std::size_t>(theta_nodes) * phi_nodes);
  for (int i = 0; i < theta_nodes; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    for (int j = 0; j < phi_nodes; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / phi_nodes;
      q.nodes.push_back({theta, phi, 0.5 * gl.weights[i] / phi_nodes});
    }
  }
  return q;
}

SphereQuadrature sphere_quadrature_for_degree(int degree) {
  degree = std::max(degree, 0);
  return sphere_quadrature(degree / 2 + 1, degree + 1);
}

}  // namespace spectrunc
