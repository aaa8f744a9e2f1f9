#ifndef SPECTRUNC_LINALG_HPP
#define SPECTRUNC_LINALG_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectrunc {

using cplx = std::complex<double>;

struct NotHermitian : std::domain_error {
  explicit NotHermitian(const std::string& what) : std::domain_error(what) {}
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Dense complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> diag);
  static CMatrix column(std::span<const cplx> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  CMatrix adjoint() const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(cplx s);

  double max_abs() const;
  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(CMatrix m, cplx s);
CMatrix operator*(cplx s, CMatrix m);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

cplx trace(const CMatrix& m);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Real part of tr(A* B), the Frobenius inner product restricted to real scalars.
double real_inner(const CMatrix& a, const CMatrix& b);

/// max |M - M*| over entries.
double hermitian_defect(const CMatrix& m);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

/// Cyclic complex Jacobi. Throws NotHermitian when M deviates from M* by more
/// than 10*tol (relative to max(1, max|M_ij|)), NoConvergence after 100 sweeps.
EigenDecomposition eig_hermitian(const CMatrix& m, double tol = 1e-12);

/// Largest singular value.
double spectral_norm(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Metric projection onto {X : ||X|| <= radius} in Frobenius geometry:
/// eigenvalue clipping for Hermitian arguments, singular-value clipping otherwise.
CMatrix project_spectral_ball(const CMatrix& m, double radius = 1.0);

using MatrixMap = std::function<CMatrix(const CMatrix&)>;

/// Dykstra's alternating projections onto (linear subspace) ∩ (closed convex
/// set). Returns the subspace iterate, which lies in the convex set to within
/// tol and approximates the nearest intersection point to y0.
CMatrix dykstra_project(const CMatrix& y0, const MatrixMap& subspace_proj,
                        const MatrixMap& ball_proj, double tol = 1e-9,
                        int max_iter = 100000);

/// Inverse of a Hermitian positive definite matrix via Cholesky. Empty when the
/// factorisation breaks down (M not numerically positive definite).
std::optional<CMatrix> inverse_hpd(const CMatrix& m);

/// Solves H x = g for a real symmetric positive definite H (row-major, dim×dim).
std::optional<std::vector<double>> solve_spd(std::vector<double> h,
                                             std::vector<double> g);

}  // namespace spectrunc

#endif  // SPECTRUNC_LINALG_HPP
