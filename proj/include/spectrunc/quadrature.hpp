#ifndef SPECTRUNC_QUADRATURE_HPP
#define SPECTRUNC_QUADRATURE_HPP

#include <vector>

namespace spectrunc {

/// Gauss–Legendre rule on [-1, 1]; exact for polynomials of degree 2n - 1.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

struct SphereNode {
  double theta;
  double phi;
  double weight;  // weights sum to 1 (normalised rotation-invariant measure)
};

/// Product rule: Gauss–Legendre in cos(theta) times the uniform trapezoid in phi.
struct SphereQuadrature {
  int theta_nodes = 0;
  int phi_nodes = 0;
  std::vector<SphereNode> nodes;

  /// Largest total degree of spherical polynomials integrated exactly.
  int exact_degree() const;
};

SphereQuadrature sphere_quadrature(int theta_nodes, int phi_nodes);

/// Smallest product rule exact for spherical polynomials of the given degree.
SphereQuadrature sphere_quadrature_for_degree(int degree);

}  // namespace spectrunc

#endif  // SPECTRUNC_QUADRATURE_HPP
