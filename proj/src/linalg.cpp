#include "spectrunc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spectrunc {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::column(std::span<const cplx> v) {
  CMatrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("CMatrix: shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("CMatrix: shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(CMatrix m, cplx s) { return m *= s; }
CMatrix operator*(cplx s, CMatrix m) { return m *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix: shape mismatch in *");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

cplx trace(const CMatrix& m) {
  cplx t{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double real_inner(const CMatrix& a, const CMatrix& b) {
  double s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += (std::conj(da[i]) * db[i]).real();
  return s;
}

double hermitian_defect(const CMatrix& m) {
  if (!m.is_square()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

bool is_skew_hermitian(const CMatrix& m) {
  if (!m.is_square()) return false;
  const double scale = std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) + std::conj(m(j, i))) > 1e-13 * scale) return false;
  return true;
}

}  // namespace

EigenDecomposition eig_hermitian(const CMatrix& m, double tol) {
  if (!m.is_square()) throw NotHermitian("eig_hermitian: matrix is not square");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  if (hermitian_defect(m) > 10.0 * tol * scale)
    throw NotHermitian("eig_hermitian: |M - M*| exceeds tolerance");

  // symmetrise so that round-off asymmetry does not leak into the rotations
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  CMatrix v = CMatrix::identity(n);

  const double threshold = std::max(a.frobenius_norm(), 1e-300) * std::max(1e-2 * tol, 1e-14);
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const cplx phase = a(p, q) / r;  // e^{i alpha}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx ph_conj = std::conj(phase);

        // A <- A V with V = diag(1, e^{-i alpha}) [[c, s], [-s, c]] on (p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * ph_conj * akq;
          a(k, q) = s * akp + c * ph_conj * akq;
        }
        // A <- V* A
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * ph_conj * vkq;
          v(k, q) = s * vkp + c * ph_conj * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > threshold)
    throw NoConvergence("eig_hermitian: Jacobi sweeps exhausted");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]).real();
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

double spectral_norm(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const double scale = std::max(1.0, m.max_abs());
  if (m.is_square() && hermitian_defect(m) <= 1e-13 * scale) {
    const auto eig = eig_hermitian(m);
    return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  }
  if (is_skew_hermitian(m)) {
    const auto eig = eig_hermitian(m * cplx{0.0, 1.0});
    return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  }
  const auto eig = eig_hermitian(m.adjoint() * m);
  return std::sqrt(std::max(0.0, eig.values.back()));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CMatrix project_spectral_ball(const CMatrix& m, double radius) {
  const double scale = std::max(1.0, m.max_abs());
  if (m.is_square() && hermitian_defect(m) <= 1e-12 * scale) {
    const auto eig = eig_hermitian(m, 1e-12);
    const std::size_t n = m.rows();
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const double lam = std::clamp(eig.values[k], -radius, radius);
      for (std::size_t i = 0; i < n; ++i) {
        const cplx vik = eig.vectors(i, k) * lam;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
      }
    }
    return out;
  }
  // M V = U Σ, hence M V diag(min(1, r/σ)) V* = U min(Σ, r) V*.
  const auto eig = eig_hermitian(m.adjoint() * m, 1e-12);
  const std::size_t n = m.cols();
  CMatrix scaled = eig.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double sigma = std::sqrt(std::max(0.0, eig.values[k]));
    const double f = sigma > radius ? radius / sigma : 1.0;
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= f;
  }
  return m * scaled * eig.vectors.adjoint();
}

CMatrix dykstra_project(const CMatrix& y0, const MatrixMap& subspace_proj,
                        const MatrixMap& ball_proj, double tol, int max_iter) {
  CMatrix x = y0;
  CMatrix p(y0.rows(), y0.cols());
  CMatrix q(y0.rows(), y0.cols());
  CMatrix y = y0;
  for (int it = 0; it < max_iter; ++it) {
    y = subspace_proj(x + p);
    p = x + p - y;
    CMatrix x_next = ball_proj(y + q);
    q = y + q - x_next;
    const double gap = (x_next - y).frobenius_norm();
    const double step = (x_next - x).frobenius_norm();
    x = std::move(x_next);
    if (gap <= tol && step <= tol) return y;
  }
  throw NoConvergence("dykstra_project: iteration limit reached");
}

std::optional<CMatrix> inverse_hpd(const CMatrix& m) {
  const std::size_t n = m.rows();
  CMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) return std::nullopt;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  // L^{-1} by forward substitution, then M^{-1} = L^{-*} L^{-1}
  CMatrix linv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = col; i < n; ++i) {
      cplx s = (i == col) ? cplx{1.0} : cplx{};
      for (std::size_t k = col; k < i; ++k) s -= l(i, k) * linv(k, col);
      linv(i, col) = s / l(i, i);
    }
  }
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      cplx s{};
      for (std::size_t k = i; k < n; ++k) s += std::conj(linv(k, i)) * linv(k, j);
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  return out;
}

std::optional<std::vector<double>> solve_spd(std::vector<double> h, std::vector<double> g) {
  const std::size_t n = g.size();
  if (h.size() != n * n) throw std::invalid_argument("solve_spd: dimension mismatch");
  for (std::size_t j = 0; j < n; ++j) {
    double d = h[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= h[j * n + k] * h[j * n + k];
    if (!(d > 0.0)) return std::nullopt;
    const double ljj = std::sqrt(d);
    h[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = h[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= h[i * n + k] * h[j * n + k];
      h[i * n + j] = s / ljj;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = g[i];
    for (std::size_t k = 0; k < i; ++k) s -= h[i * n + k] * g[k];
    g[i] = s / h[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = g[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= h[k * n + ii] * g[k];
    g[ii] = s / h[ii * n + ii];
  }
  return g;
}

}  // namespace spectrunc
