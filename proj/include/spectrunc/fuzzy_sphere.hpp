#ifndef SPECTRUNC_FUZZY_SPHERE_HPP
#define SPECTRUNC_FUZZY_SPHERE_HPP

// The fuzzy sphere L(V_n), V_n the n-dimensional irreducible representation
// of SU(2), with Dirac operator D_n = sum_{j<k} sigma^j sigma^k (x) [L_jk, .].
//
// Basis of V_n: weight vectors |j, m>, m = j, j-1, ..., -j (index 0 is the
// highest weight), j = (n - 1)/2. Spin matrices J_1, J_2, J_3 are Hermitian
// with [J_a, J_b] = i eps_abc J_c, and the skew-Hermitian generators are
//   L_12 = -i J_3,  L_13 = -i J_2,  L_23 = -i J_1.
// The rotation taking the north pole to (theta, phi) is the Euler section
//   U(theta, phi) = exp(-i phi J_3) exp(-i theta J_2).

#include <memory>

#include "spectrunc/linalg.hpp"
#include "spectrunc/quadrature.hpp"
#include "spectrunc/sphere_function.hpp"

namespace spectrunc {

struct QuadratureTooCoarse : std::invalid_argument {
  explicit QuadratureTooCoarse(const std::string& what) : std::invalid_argument(what) {}
};

class Su2Rep {
 public:
  explicit Su2Rep(int n);

  int dim() const { return n_; }
  double spin() const { return 0.5 * (n_ - 1); }

  const CMatrix& L12() const { return data_->l12; }
  const CMatrix& L13() const { return data_->l13; }
  const CMatrix& L23() const { return data_->l23; }

  /// Hermitian spin matrix J_axis, axis in {1, 2, 3}.
  const CMatrix& J(int axis) const;

  /// exp(-i angle J_2) applied to the highest-weight vector.
  std::vector<cplx> rotate_highest_weight(double theta) const;
  CMatrix exp_J2(double angle) const;
  CMatrix exp_J3(double angle) const;

 private:
  struct Data {
    CMatrix j1, j2, j3, l12, l13, l23;
    EigenDecomposition j2_eig;
  };
  int n_;
  std::shared_ptr<const Data> data_;
};

Su2Rep su2_generators(int n);

class FuzzyOperator {
 public:
  FuzzyOperator(Su2Rep rep, CMatrix m);

  const Su2Rep& rep() const { return rep_; }
  const CMatrix& matrix() const { return m_; }
  int dim() const { return rep_.dim(); }
  bool is_hermitian(double tol = 1e-12) const { return hermitian_defect(m_) <= tol; }

 private:
  Su2Rep rep_;
  CMatrix m_;
};

/// U(theta, phi); alpha_g(A) = U A U*.
CMatrix rotation(const Su2Rep& rep, const SpherePoint& p);

/// U(theta, phi) e_0: the coherent vector whose projector is alpha_g(P).
std::vector<cplx> coherent_vector(const Su2Rep& rep, const SpherePoint& p);

/// sigma_T(p) = tr(T alpha_g(P)), P the highest-weight projection.
cplx berezin_symbol(const FuzzyOperator& t, const SpherePoint& p);

/// sigma_T as a spherical-harmonic expansion (degree n - 1, exact projection).
SphereFunction berezin_symbol_function(const FuzzyOperator& t);

/// n * integral f(p) alpha_p(P) dp. Throws QuadratureTooCoarse unless the rule
/// is exact to degree 2L + 2n. A default-constructed rule selects the minimal one.
FuzzyOperator berezin_quantize(const SphereFunction& f, const Su2Rep& rep,
                               const SphereQuadrature& quad = {});

/// Eigenvalue of the Berezin transform on degree-l harmonics:
/// (n-1)! n! / ((n-1-l)! (n+l)!) for l < n, zero otherwise.
double berezin_multiplier(int n, int l);

/// H_P(p) = n tr(P alpha_p(P)).
double heat_measure(const Su2Rep& rep, const SpherePoint& p);

/// integral of theta * H_P over the normalised sphere measure.
/// A default-constructed rule selects 2048 Gauss–Legendre nodes in cos(theta);
/// theta is not polynomial in cos(theta), so convergence is algebraic (~1e-9 here).
double gamma_sphere(const Su2Rep& rep, const SphereQuadrature& quad = {});

/// [D_n, T] as a 2n x 2n matrix; its spectral norm is the Lipschitz seminorm.
CMatrix fuzzy_commutator(const FuzzyOperator& t);

/// sigma^1 sigma^2, sigma^1 sigma^3, sigma^2 sigma^3.
const std::array<CMatrix, 3>& pauli_products();

}  // namespace spectrunc

#endif  // SPECTRUNC_FUZZY_SPHERE_HPP
