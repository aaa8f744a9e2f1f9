#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "spectrunc/linalg.hpp"

using namespace spectrunc;

namespace {

CMatrix random_matrix(std::mt19937_64& rng, std::size_t n, bool hermitian) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = cplx{g(rng), g(rng)};
  if (hermitian) m = (m + m.adjoint()) * cplx{0.5, 0.0};
  return m;
}

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) e(i, k) = m(i, k);
  return e;
}

CMatrix pauli(int which) {
  CMatrix s(2, 2);
  if (which == 1) {
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
  } else if (which == 2) {
    s(0, 1) = cplx{0.0, -1.0};
    s(1, 0) = cplx{0.0, 1.0};
  } else {
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
  }
  return s;
}

}  // namespace

TEST_CASE("adjoint is an involution") {
  std::mt19937_64 rng(1);
  const auto m = random_matrix(rng, 5, false);
  CHECK((m.adjoint().adjoint() - m).max_abs() == 0.0);
}

TEST_CASE("eig_hermitian on trivial inputs") {
  const auto id = eig_hermitian(CMatrix::identity(3));
  for (double v : id.values) CHECK(v == doctest::Approx(1.0));
  const double d[] = {5.0, -2.0, 0.0};
  const auto diag = eig_hermitian(CMatrix::diagonal(d));
  CHECK(diag.values[0] == doctest::Approx(-2.0));
  CHECK(diag.values[1] == doctest::Approx(0.0));
  CHECK(diag.values[2] == doctest::Approx(5.0));
}

TEST_CASE("eig_hermitian 2x2 against the quadratic formula") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 2, true);
    const double a = m(0, 0).real(), b = m(1, 1).real();
    const double disc = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(m(0, 1)));
    const auto e = eig_hermitian(m);
    CHECK(e.values[0] == doctest::Approx(0.5 * (a + b) - disc).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(0.5 * (a + b) + disc).epsilon(1e-12));
  }
}

TEST_CASE("eig_hermitian postconditions and agreement with Eigen") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 3u, 8u, 20u, 40u}) {
    const auto m = random_matrix(rng, n, true);
    const auto e = eig_hermitian(m);
    const double scale = std::max(1.0, m.max_abs());
    CMatrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = e.values[i];
    CHECK((m * e.vectors - e.vectors * lam).max_abs() <= 1e-10 * scale);
    CHECK((e.vectors.adjoint() * e.vectors - CMatrix::identity(n)).max_abs() <= 1e-10);
    for (std::size_t i = 1; i < n; ++i) CHECK(e.values[i - 1] <= e.values[i]);

    double sum = 0.0;
    for (double v : e.values) sum += v;
    CHECK(std::abs(sum - trace(m).real()) <= 1e-10 * std::max(1.0, std::abs(sum)));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(m));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(e.values[i] - ref.eigenvalues()(static_cast<Eigen::Index>(i))) <= 1e-10 * scale);
  }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(m), NotHermitian);
}

TEST_CASE("spectral_norm examples") {
  CHECK(spectral_norm(CMatrix(3, 3)) == 0.0);
  CHECK(spectral_norm(pauli(1)) == doctest::Approx(1.0));
  CMatrix nil(2, 2);
  nil(0, 1) = 2.0;
  CHECK(spectral_norm(nil) == doctest::Approx(2.0));
}

TEST_CASE("spectral_norm matches eigenvalues and singular values") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_matrix(rng, 6, true);
    const auto e = eig_hermitian(h);
    const double expect = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
    CHECK(std::abs(spectral_norm(h) - expect) <= 1e-10 * expect);

    const auto g = random_matrix(rng, 7, false);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(g));
    CHECK(spectral_norm(g) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-10));
  }
}

TEST_CASE("kron examples") {
  CHECK((kron(CMatrix::identity(2), CMatrix::identity(2)) - CMatrix::identity(4)).max_abs() == 0.0);
  const double ab[] = {2.0, 7.0};
  const auto k = kron(pauli(3), CMatrix::diagonal(ab));
  const double expect[] = {2.0, 7.0, -2.0, -7.0};
  CHECK((k - CMatrix::diagonal(expect)).max_abs() == 0.0);
}

TEST_CASE("kron(sigma1, sigma1) against index arithmetic") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  std::vector<cplx> v(4);
  for (auto& x : v) x = cplx{g(rng), g(rng)};
  const auto s1 = pauli(1);
  const auto k = kron(s1, s1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      cplx naive{}, fast{};
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) naive += s1(i, a) * s1(j, b) * v[2 * a + b];
      for (std::size_t c = 0; c < 4; ++c) fast += k(2 * i + j, c) * v[c];
      CHECK(std::abs(naive - fast) < 1e-14);
    }
}

TEST_CASE("spectral norm is multiplicative under kron") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_matrix(rng, 3, false);
    const auto b = random_matrix(rng, 4, false);
    CHECK(spectral_norm(kron(a, b)) == doctest::Approx(spectral_norm(a) * spectral_norm(b)).epsilon(1e-8));
  }
}

TEST_CASE("project_spectral_ball clips eigenvalues") {
  const double d[] = {3.0, -0.5};
  const auto p = project_spectral_ball(CMatrix::diagonal(d));
  CHECK(p(0, 0).real() == doctest::Approx(1.0));
  CHECK(p(1, 1).real() == doctest::Approx(-0.5));
}

TEST_CASE("dykstra_project examples") {
  const MatrixMap whole = [](const CMatrix& m) { return m; };
  const MatrixMap ball = [](const CMatrix& m) { return project_spectral_ball(m); };

  SUBCASE("already feasible") {
    const double d[] = {0.25, -0.5};
    const auto y0 = CMatrix::diagonal(d);
    CHECK((dykstra_project(y0, whole, ball) - y0).max_abs() < 1e-12);
  }
  SUBCASE("eigenvalue clipping when the subspace is everything") {
    std::mt19937_64 rng(7);
    const double d[] = {3.0, -0.5};
    // rotate diag(3, -0.5) by a random unitary
    const auto u = eig_hermitian(random_matrix(rng, 2, true)).vectors;
    const auto y0 = u * CMatrix::diagonal(d) * u.adjoint();
    const auto x = dykstra_project(y0, whole, ball);
    const auto e = eig_hermitian(x);
    CHECK(e.values[0] == doctest::Approx(-0.5).epsilon(1e-8));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("line y = x meets the unit disc") {
    // points (a, b) as diag(a, b); the disc is the Frobenius ball
    const MatrixMap line = [](const CMatrix& m) {
      const cplx mean = 0.5 * (m(0, 0) + m(1, 1));
      CMatrix out(2, 2);
      out(0, 0) = mean;
      out(1, 1) = mean;
      return out;
    };
    const MatrixMap disc = [](const CMatrix& m) {
      const double r = m.frobenius_norm();
      return r <= 1.0 ? m : m * cplx{1.0 / r, 0.0};
    };
    const double d[] = {2.0, 0.0};
    const auto x = dykstra_project(CMatrix::diagonal(d), line, disc);
    CHECK(x(0, 0).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
    CHECK(x(1, 1).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
  }
}

TEST_CASE("dykstra output is the nearest feasible point among random samples") {
  // subspace: real symmetric 3x3 with zero trace; set: spectral ball of radius 1
  const MatrixMap sub = [](const CMatrix& m) {
    CMatrix out(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) out(i, k) = 0.5 * (m(i, k).real() + m(k, i).real());
    const double tr = trace(out).real() / 3.0;
    for (std::size_t i = 0; i < 3; ++i) out(i, i) -= tr;
    return out;
  };
  const MatrixMap ball = [](const CMatrix& m) { return project_spectral_ball(m); };
  std::mt19937_64 rng(8);
  const auto y0 = random_matrix(rng, 3, true) * cplx{2.0, 0.0};
  const double tol = 1e-9;
  const auto x = dykstra_project(y0, sub, ball, tol);
  CHECK((sub(x) - x).max_abs() <= 1e-8);
  CHECK(spectral_norm(x) <= 1.0 + 1e-7);
  const double best = (x - y0).frobenius_norm();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int s = 0; s < 2000; ++s) {
    CMatrix z(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) z(i, k) = u(rng);
    z = sub(z);
    const double nz = spectral_norm(z);
    if (nz > 1.0) z *= cplx{1.0 / nz, 0.0};
    CHECK((z - y0).frobenius_norm() >= best - 1e-7);
  }
}

TEST_CASE("inverse_hpd and solve_spd") {
  std::mt19937_64 rng(9);
  const auto a = random_matrix(rng, 5, false);
  const auto h = a * a.adjoint() + CMatrix::identity(5);
  const auto inv = inverse_hpd(h);
  REQUIRE(inv);
  CHECK((*inv * h - CMatrix::identity(5)).max_abs() < 1e-10);
  const double d[] = {1.0, -1.0};
  CHECK_FALSE(inverse_hpd(CMatrix::diagonal(d)));

  const auto x = solve_spd({4.0, 1.0, 1.0, 3.0}, {1.0, 2.0});
  REQUIRE(x);
  CHECK((*x)[0] == doctest::Approx(1.0 / 11.0));
  CHECK((*x)[1] == doctest::Approx(7.0 / 11.0));
}
