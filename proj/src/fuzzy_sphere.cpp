#include "spectrunc/fuzzy_sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectrunc {

Su2Rep::Su2Rep(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Su2Rep: dimension must be >= 1");
  const auto un = static_cast<std::size_t>(n);
  const double j = 0.5 * (n - 1);
  CMatrix jplus(un, un);
  Data d;
  d.j3 = CMatrix(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    const double m = j - static_cast<double>(i);
    d.j3(i, i) = m;
    if (i > 0) jplus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const CMatrix jminus = jplus.adjoint();
  d.j1 = (jplus + jminus) * cplx{0.5, 0.0};
  d.j2 = (jplus - jminus) * cplx{0.0, -0.5};
  const cplx minus_i{0.0, -1.0};
  d.l12 = d.j3 * minus_i;
  d.l13 = d.j2 * minus_i;
  d.l23 = d.j1 * minus_i;
  d.j2_eig = eig_hermitian(d.j2);
  data_ = std::make_shared<const Data>(std::move(d));
}

const CMatrix& Su2Rep::J(int axis) const {
  switch (axis) {
    case 1: return data_->j1;
    case 2: return data_->j2;
    case 3: return data_->j3;
    default: throw std::out_of_range("Su2Rep::J: axis must be 1, 2 or 3");
  }
}

CMatrix Su2Rep::exp_J2(double angle) const {
  const auto& eig = data_->j2_eig;
  CMatrix scaled = eig.vectors;
  for (std::size_t k = 0; k < scaled.cols(); ++k) {
    const cplx f = std::polar(1.0, -angle * eig.values[k]);
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, k) *= f;
  }
  return scaled * eig.vectors.adjoint();
}

CMatrix Su2Rep::exp_J3(double angle) const {
  CMatrix out(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) = std::polar(1.0, -angle * data_->j3(i, i).real());
  return out;
}

std::vector<cplx> Su2Rep::rotate_highest_weight(double theta) const {
  const auto& eig = data_->j2_eig;
  const auto un = static_cast<std::size_t>(n_);
  std::vector<cplx> out(un);
  for (std::size_t k = 0; k < un; ++k) {
    const cplx f = std::polar(1.0, -theta * eig.values[k]) * std::conj(eig.vectors(0, k));
    for (std::size_t i = 0; i < un; ++i) out[i] += eig.vectors(i, k) * f;
  }
  return out;
}

Su2Rep su2_generators(int n) { return Su2Rep(n); }

FuzzyOperator::FuzzyOperator(Su2Rep rep, CMatrix m) : rep_(std::move(rep)), m_(std::move(m)) {
  const auto n = static_cast<std::size_t>(rep_.dim());
  if (m_.rows() != n || m_.cols() != n) throw std::invalid_argument("FuzzyOperator: matrix size must match the representation");
}

CMatrix rotation(const Su2Rep& rep, const SpherePoint& p) { return rep.exp_J3(p.phi) * rep.exp_J2(p.theta); }

std::vector<cplx> coherent_vector(const Su2Rep& rep, const SpherePoint& p) {
  auto v = rep.rotate_highest_weight(p.theta);
  const double j = rep.spin();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::polar(1.0, -p.phi * (j - static_cast<double>(i)));
  return v;
}

namespace {

cplx expectation(const CMatrix& t, const std::vector<cplx>& v) {
  cplx s{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    cplx row{};
    for (std::size_t k = 0; k < v.size(); ++k) row += t(i, k) * v[k];
    s += std::conj(v[i]) * row;
  }
  return s;
}

}  // namespace

cplx berezin_symbol(const FuzzyOperator& t, const SpherePoint& p) {
  return expectation(t.matrix(), coherent_vector(t.rep(), p));
}

SphereFunction berezin_symbol_function(const FuzzyOperator& t) {
  const int degree = t.dim() - 1;
  const auto quad = sphere_quadrature_for_degree(2 * degree);
  return SphereFunction::project([&](const SpherePoint& p) { return berezin_symbol(t, p); }, degree, quad);
}

FuzzyOperator berezin_quantize(const SphereFunction& f, const Su2Rep& rep, const SphereQuadrature& quad_in) {
  const int n = rep.dim();
  const int required = 2 * f.max_degree() + 2 * n;
  const SphereQuadrature quad = quad_in.nodes.empty() ? sphere_quadrature_for_degree(required) : quad_in;
  if (quad.exact_degree() < required)
    throw QuadratureTooCoarse("berezin_quantize: quadrature must be exact to degree 2L + 2n");
  const auto un = static_cast<std::size_t>(n);
  CMatrix m(un, un);
  for (const auto& node : quad.nodes) {
    const SpherePoint p{node.theta, node.phi};
    const cplx w = static_cast<double>(n) * node.weight * f(p);
    const auto v = coherent_vector(rep, p);
    for (std::size_t i = 0; i < un; ++i) {
      const cplx wi = w * v[i];
      for (std::size_t k = 0; k < un; ++k) m(i, k) += wi * std::conj(v[k]);
    }
  }
  return FuzzyOperator(rep, std::move(m));
}

double berezin_multiplier(int n, int l) {
  if (l < 0 || n < 1) throw std::invalid_argument("berezin_multiplier: need n >= 1, l >= 0");
  if (l >= n) return 0.0;
  // prod_{i=1..l} (n - i) / (n + i)
  double r = 1.0;
  for (int i = 1; i <= l; ++i) r *= static_cast<double>(n - i) / static_cast<double>(n + i);
  return r;
}

double heat_measure(const Su2Rep& rep, const SpherePoint& p) {
  const auto v = coherent_vector(rep, p);
  return rep.dim() * std::norm(v[0]);
}

double gamma_sphere(const Su2Rep& rep, const SphereQuadrature& quad_in) {
  const SphereQuadrature quad = quad_in.nodes.empty() ? sphere_quadrature(2048, 1) : quad_in;
  if (quad.theta_nodes < 2 * rep.dim())
    throw QuadratureTooCoarse("gamma_sphere: need at least 2n Gauss-Legendre nodes in cos(theta)");
  double sum = 0.0;
  for (const auto& node : quad.nodes) sum += node.weight * node.theta * heat_measure(rep, {node.theta, node.phi});
  return sum;
}

const std::array<CMatrix, 3>& pauli_products() {
  static const std::array<CMatrix, 3> products = [] {
    CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1(0, 1) = 1.0;
    s1(1, 0) = 1.0;
    s2(0, 1) = cplx{0.0, -1.0};
    s2(1, 0) = cplx{0.0, 1.0};
    s3(0, 0) = 1.0;
    s3(1, 1) = -1.0;
    return std::array<CMatrix, 3>{s1 * s2, s1 * s3, s2 * s3};
  }();
  return products;
}

CMatrix fuzzy_commutator(const FuzzyOperator& t) {
  const auto& rep = t.rep();
  const auto& pp = pauli_products();
  const auto& m = t.matrix();
  CMatrix out = kron(pp[0], commutator(rep.L12(), m));
  out += kron(pp[1], commutator(rep.L13(), m));
  out += kron(pp[2], commutator(rep.L23(), m));
  return out;
}

}  // namespace spectrunc
