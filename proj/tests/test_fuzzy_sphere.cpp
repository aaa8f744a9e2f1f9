#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spectrunc/fuzzy_sphere.hpp"

using namespace spectrunc;
using std::numbers::pi;

namespace {

const CMatrix& generator(const Su2Rep& rep, int j, int k) {
  if (j == 1 && k == 2) return rep.L12();
  if (j == 1 && k == 3) return rep.L13();
  return rep.L23();
}

// L_jk with L_kj = -L_jk and L_jj = 0
CMatrix L(const Su2Rep& rep, int j, int k) {
  const auto n = static_cast<std::size_t>(rep.dim());
  if (j == k) return CMatrix(n, n);
  if (j < k) return generator(rep, j, k);
  return generator(rep, k, j) * cplx{-1.0, 0.0};
}

CMatrix random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  const auto un = static_cast<std::size_t>(n);
  CMatrix m(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t k = 0; k < un; ++k) m(i, k) = cplx{g(rng), g(rng)};
  return (m + m.adjoint()) * cplx{0.5, 0.0};
}

SphereFunction random_real_function(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> g;
  SphereFunction f(degree);
  for (int l = 0; l <= degree; ++l) {
    f.set(l, 0, g(rng));
    for (int m = 1; m <= l; ++m) {
      const cplx c{g(rng), g(rng)};
      f.set(l, m, c);
      f.set(l, -m, (m % 2 == 0 ? 1.0 : -1.0) * std::conj(c));
    }
  }
  return f;
}

SpherePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::acos(1.0 - 2.0 * u(rng)), 2.0 * pi * u(rng)};
}

double legendre(int l, double t) {
  double p0 = 1.0, p1 = t;
  if (l == 0) return p0;
  for (int k = 2; k <= l; ++k) {
    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace

TEST_CASE("su(2) commutation relations and Casimir") {
  for (int n = 1; n <= 12; ++n) {
    const Su2Rep rep(n);
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
          for (int m = 1; m <= 3; ++m) {
            CMatrix rhs = CMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            if (k == l) rhs += L(rep, j, m);
            if (k == m) rhs -= L(rep, j, l);
            if (j == l) rhs -= L(rep, k, m);
            if (j == m) rhs += L(rep, k, l);
            CHECK((commutator(L(rep, j, k), L(rep, l, m)) - rhs).max_abs() < 1e-10);
          }
    const CMatrix cas = rep.L12() * rep.L12() + rep.L13() * rep.L13() + rep.L23() * rep.L23();
    CHECK((cas + CMatrix::identity(static_cast<std::size_t>(n)) * cplx{(n * n - 1) / 4.0, 0.0}).max_abs() < 1e-10);
  }
}

TEST_CASE("su2_generators small cases") {
  const auto one = su2_generators(1);
  CHECK(one.L12().max_abs() + one.L13().max_abs() + one.L23().max_abs() == 0.0);
  const auto two = su2_generators(2);
  // L_12 = -(i/2) sigma_3
  CHECK(std::abs(two.L12()(0, 0) - cplx{0.0, -0.5}) < 1e-15);
  CHECK(std::abs(two.L12()(1, 1) - cplx{0.0, 0.5}) < 1e-15);
  for (const CMatrix* g : {&two.L12(), &two.L13(), &two.L23()}) {
    const auto e = eig_hermitian(*g * cplx{0.0, 1.0});
    CHECK(e.values[0] == doctest::Approx(-0.5));
    CHECK(e.values[1] == doctest::Approx(0.5));
  }
  const auto five = su2_generators(5);
  const CMatrix cas = five.L12() * five.L12() + five.L13() * five.L13() + five.L23() * five.L23();
  for (std::size_t i = 0; i < 5; ++i) CHECK(cas(i, i).real() == doctest::Approx(-6.0));
}

TEST_CASE("rotation") {
  const Su2Rep rep(4);
  CHECK((rotation(rep, SpherePoint::north()) - CMatrix::identity(4)).max_abs() < 1e-12);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 5; ++t) {
    const auto u = rotation(rep, random_point(rng));
    CHECK((u.adjoint() * u - CMatrix::identity(4)).max_abs() < 1e-10);
  }
  const Su2Rep two(2);
  const auto u = rotation(two, {pi, 0.0});
  CMatrix p(2, 2), lowest(2, 2);
  p(0, 0) = 1.0;
  lowest(1, 1) = 1.0;
  CHECK((u * p * u.adjoint() - lowest).max_abs() < 1e-12);
}

TEST_CASE("berezin_symbol") {
  const Su2Rep rep(5);
  std::mt19937_64 rng(32);
  const FuzzyOperator id(rep, CMatrix::identity(5));
  CMatrix pm(5, 5);
  pm(0, 0) = 1.0;
  const FuzzyOperator p(rep, pm);
  CHECK(std::abs(berezin_symbol(p, SpherePoint::north()) - 1.0) < 1e-14);
  for (int t = 0; t < 10; ++t) {
    const auto q = random_point(rng);
    CHECK(std::abs(berezin_symbol(id, q) - 1.0) < 1e-12);
    CHECK(berezin_symbol(p, q).real() == doctest::Approx(std::pow(std::cos(q.theta / 2.0), 8)).epsilon(1e-12));
    CHECK(heat_measure(rep, q) == doctest::Approx(5.0 * std::pow(std::cos(q.theta / 2.0), 8)).epsilon(1e-12));
  }
  CHECK(heat_measure(rep, SpherePoint::north()) == doctest::Approx(5.0));
}

TEST_CASE("symbol is independent of the section") {
  // rotating the highest weight vector by its stabiliser only changes a phase
  const Su2Rep rep(4);
  std::mt19937_64 rng(33);
  const FuzzyOperator t(rep, random_hermitian(rng, 4));
  const SpherePoint q{1.1, 0.4};
  const auto u = rotation(rep, q) * rep.exp_J3(0.9);
  CMatrix pm(4, 4);
  pm(0, 0) = 1.0;
  const cplx other = trace(t.matrix() * u * pm * u.adjoint());
  CHECK(std::abs(other - berezin_symbol(t, q)) < 1e-12);
}

TEST_CASE("berezin_quantize") {
  const Su2Rep rep(4);
  const auto one = berezin_quantize(SphereFunction::constant(1.0), rep);
  CHECK((one.matrix() - CMatrix::identity(4)).max_abs() < 1e-8);
  CHECK_THROWS_AS(berezin_quantize(SphereFunction::harmonic(3, 1), rep, sphere_quadrature(3, 4)), QuadratureTooCoarse);

  std::mt19937_64 rng(34);
  for (int t = 0; t < 20; ++t) {
    const int degree = t % 4;
    const auto f = random_real_function(rng, degree);
    const FuzzyOperator op(rep, random_hermitian(rng, 4));
    const auto fq = berezin_quantize(f, rep);
    CHECK(fq.is_hermitian(1e-10));
    const auto quad = sphere_quadrature_for_degree(degree + 2 * rep.dim());
    cplx lhs{};
    for (const auto& node : quad.nodes) {
      const SpherePoint q{node.theta, node.phi};
      lhs += node.weight * std::conj(f(q)) * berezin_symbol(op, q);
    }
    const cplx rhs = trace(fq.matrix().adjoint() * op.matrix()) / 4.0;
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("Berezin transform multiplies degree-l harmonics") {
  for (int n : {1, 2, 3, 6}) {
    const Su2Rep rep(n);
    const auto gl = gauss_legendre(64);
    for (int l = 0; l <= 4; ++l) {
      // Funk–Hecke: multiplier = int H_P(theta) P_l(cos theta) dmu
      double fh = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double t = gl.nodes[i];
        fh += 0.5 * gl.weights[i] * n * std::pow(0.5 * (1.0 + t), n - 1) * legendre(l, t);
      }
      CHECK(berezin_multiplier(n, l) == doctest::Approx(fh).epsilon(1e-12));
      for (int m : {-l, 0, l}) {
        const auto y = SphereFunction::harmonic(l, m);
        const auto back = berezin_symbol_function(berezin_quantize(y, rep));
        for (int ll = 0; ll <= back.max_degree(); ++ll)
          for (int mm = -ll; mm <= ll; ++mm) {
            const cplx expect = (ll == l && mm == m) ? cplx{fh} : cplx{};
            CHECK(std::abs(back.coeff(ll, mm) - expect) < 1e-6);
          }
      }
    }
  }
  CHECK(berezin_multiplier(2, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(berezin_multiplier(3, 3) == 0.0);
}

TEST_CASE("heat measure is a probability measure") {
  for (int n : {1, 2, 5, 12}) {
    const Su2Rep rep(n);
    double total = 0.0;
    for (const auto& node : sphere_quadrature_for_degree(2 * n).nodes)
      total += node.weight * heat_measure(rep, {node.theta, node.phi});
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("gamma_sphere") {
  CHECK(gamma_sphere(Su2Rep(1)) == doctest::Approx(pi / 2.0).epsilon(1e-10));
  double prev = INFINITY;
  for (int n = 1; n <= 16; ++n) {
    // (n/2) int_0^pi theta cos^{2(n-1)}(theta/2) sin theta dtheta by Simpson
    const int m = 20000;
    const double h = pi / m;
    double s = 0.0;
    for (int i = 0; i <= m; ++i) {
      const double t = i * h;
      const double v = t * std::pow(std::cos(t / 2.0), 2 * (n - 1)) * std::sin(t);
      s += v * (i == 0 || i == m ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0));
    }
    const double simpson = 0.5 * n * s * h / 3.0;
    const double g = gamma_sphere(Su2Rep(n));
    CHECK(std::abs(g - simpson) < 1e-8);
    CHECK(g < prev);
    prev = g;
  }
  CHECK_THROWS_AS(gamma_sphere(Su2Rep(8), sphere_quadrature(10, 1)), QuadratureTooCoarse);
}

TEST_CASE("fuzzy_commutator") {
  const Su2Rep two(2);
  CHECK(fuzzy_commutator(FuzzyOperator(two, CMatrix::identity(2))).max_abs() < 1e-15);
  const auto c = fuzzy_commutator(FuzzyOperator(two, two.L12()));
  // [L_13, L_12] = L_23 and [L_23, L_12] = -L_13, so with
  // sigma^1 sigma^3 = -i sigma^2 and sigma^2 sigma^3 = i sigma^1 the commutator
  // is -(1/2)(sigma_2 (x) sigma_1 + sigma_1 (x) sigma_2).
  CMatrix s1(2, 2), s2(2, 2);
  s1(0, 1) = 1.0;
  s1(1, 0) = 1.0;
  s2(0, 1) = cplx{0.0, -1.0};
  s2(1, 0) = cplx{0.0, 1.0};
  const CMatrix expect = (kron(s2, s1) + kron(s1, s2)) * cplx{-0.5, 0.0};
  CHECK((c - expect).max_abs() < 1e-14);
  CHECK(spectral_norm(c) == doctest::Approx(1.0));

  const auto& pp = pauli_products();
  CMatrix s3(2, 2);
  s3(0, 0) = 1.0;
  s3(1, 1) = -1.0;
  CHECK((pp[0] - s3 * cplx{0.0, 1.0}).max_abs() < 1e-15);
  CHECK((pp[1] - s2 * cplx{0.0, -1.0}).max_abs() < 1e-15);
  CHECK((pp[2] - s1 * cplx{0.0, 1.0}).max_abs() < 1e-15);
}

TEST_CASE("Lipschitz seminorm is rotation invariant") {
  std::mt19937_64 rng(35);
  for (int n : {2, 3, 5}) {
    const Su2Rep rep(n);
    for (int t = 0; t < 5; ++t) {
      const auto m = random_hermitian(rng, n);
      const auto u = rotation(rep, random_point(rng)) * rep.exp_J3(1.7 * t);
      const double a = spectral_norm(fuzzy_commutator(FuzzyOperator(rep, m)));
      const double b = spectral_norm(fuzzy_commutator(FuzzyOperator(rep, u * m * u.adjoint())));
      CHECK(b == doctest::Approx(a).epsilon(1e-10));
    }
  }
}

TEST_CASE("symbol is equivariant for rotations about the third axis") {
  std::mt19937_64 rng(36);
  const Su2Rep rep(4);
  const FuzzyOperator t(rep, random_hermitian(rng, 4));
  for (int s = 0; s < 10; ++s) {
    const double phi0 = 0.37 * s;
    const auto u = rep.exp_J3(phi0);
    const FuzzyOperator rotated(rep, u * t.matrix() * u.adjoint());
    const auto q = random_point(rng);
    CHECK(std::abs(berezin_symbol(rotated, q) - berezin_symbol(t, {q.theta, q.phi - phi0})) < 1e-8);
  }
}

TEST_CASE("spherical harmonic derivatives and sphere_lipschitz") {
  CHECK(sphere_lipschitz(SphereFunction::constant(2.0)) == 0.0);
  const auto x3 = SphereFunction::harmonic(1, 0, std::sqrt(4.0 * pi / 3.0));
  CHECK(x3({0.3, 0.2}).real() == doctest::Approx(std::cos(0.3)));
  CHECK(sphere_lipschitz(x3) == doctest::Approx(1.0).epsilon(1e-8));
  SphereFunction x1(1);
  x1.set(1, -1, std::sqrt(2.0 * pi / 3.0));
  x1.set(1, 1, -std::sqrt(2.0 * pi / 3.0));
  CHECK(x1({0.7, 0.4}).real() == doctest::Approx(std::sin(0.7) * std::cos(0.4)));
  CHECK(sphere_lipschitz(x1) == doctest::Approx(1.0).epsilon(1e-8));

  std::mt19937_64 rng(37);
  const auto f = random_real_function(rng, 5);
  for (int t = 0; t < 10; ++t) {
    const auto q = random_point(rng);
    const double h = 1e-6;
    const auto g = f.gradient(q);
    const double dt = (f({q.theta + h, q.phi}) - f({q.theta - h, q.phi})).real() / (2 * h);
    const double dp = (f({q.theta, q.phi + h}) - f({q.theta, q.phi - h})).real() / (2 * h * std::sin(q.theta));
    CHECK(g[0].real() == doctest::Approx(dt).epsilon(1e-6));
    CHECK(g[1].real() == doctest::Approx(dp).epsilon(1e-6));
  }
  // grid refinement converges from below
  const double coarse = sphere_lipschitz(f, 8);
  const double fine = sphere_lipschitz(f, 64);
  CHECK(coarse <= fine + 1e-9);
  CHECK(sphere_lipschitz(f, 128) == doctest::Approx(fine).epsilon(1e-6));
}

TEST_CASE("contractions and approximation on random inputs") {
  std::mt19937_64 rng(38);
  for (int n : {2, 3, 5, 8}) {
    const Su2Rep rep(n);
    const double gam = gamma_sphere(rep);
    for (int t = 0; t < 6; ++t) {
      const FuzzyOperator op(rep, random_hermitian(rng, n));
      const auto sigma = berezin_symbol_function(op);
      CHECK(sphere_sup(sigma, 48) <= spectral_norm(op.matrix()) + 1e-8);
      CHECK(sphere_lipschitz(sigma) <= spectral_norm(fuzzy_commutator(op)) + 1e-8);

      const auto f = random_real_function(rng, 1 + t % 4);
      const auto fq = berezin_quantize(f, rep);
      const double lip_f = sphere_lipschitz(f);
      CHECK(spectral_norm(fq.matrix()) <= sphere_sup(f, 64) * (1.0 + 1e-3) + 1e-8);
      CHECK(spectral_norm(fuzzy_commutator(fq)) <= lip_f * (1.0 + 1e-3) + 1e-8);

      SphereFunction err = berezin_symbol_function(fq);
      SphereFunction diff(f.max_degree());
      for (int l = 0; l <= f.max_degree(); ++l)
        for (int m = -l; m <= l; ++m) diff.set(l, m, f.coeff(l, m) - err.coeff(l, m));
      CHECK(sphere_sup(diff, 64) <= gam * lip_f + 1e-8);
    }
  }
}
