#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spectrunc/fejer_riesz.hpp"

using namespace spectrunc;
using std::numbers::pi;

namespace {

FRElement random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  FRElement a(n);
  a.set(0, g(rng));
  for (int k = 1; k < n; ++k) {
    const cplx c{g(rng), g(rng)};
    a.set(k, c);
    a.set(-k, std::conj(c));
  }
  return a;
}

FRElement fejer_element(int n) {
  FRElement a(n);
  for (int k = -(n - 1); k <= n - 1; ++k) a.set(k, 1.0 - std::abs(k) / static_cast<double>(n));
  return a;
}

}  // namespace

TEST_CASE("fr_embed") {
  CHECK(std::abs(fr_embed(FRElement::identity(3))(1.3) - 1.0) < 1e-15);
  FRElement a(3);
  a.set(1, 1.0);
  const auto f = fr_embed(a);
  CHECK(std::abs(f(0.4) - std::polar(1.0, 0.4)) < 1e-15);
  const auto f2 = fr_embed(fejer_element(2));
  CHECK(circle_sup(f2).grid_max == doctest::Approx(2.0));
  CHECK(fejer_element(2).is_positive());
}

TEST_CASE("fr_compress") {
  const auto id = fr_compress(FourierPoly::constant(1.0), 4);
  CHECK(id.coeff(0) == cplx{1.0});
  CHECK(fr_compress(FourierPoly::mode(1), 2).coeff(1) == cplx{0.5});
  std::mt19937_64 rng(21);
  const auto a = random_hermitian(rng, 5);
  const auto diff = fr_compress(fr_embed(a), 5) - a;
  for (int k = -4; k <= 4; ++k) CHECK(std::abs(diff.coeff(k) + (std::abs(k) / 5.0) * a.coeff(k)) < 1e-15);
}

TEST_CASE("fr_norm and fr_lipschitz") {
  CHECK(fr_norm(FRElement::identity(4)).refined == doctest::Approx(1.0));
  FRElement c(2);
  c.set(1, 0.5);
  c.set(-1, 0.5);
  CHECK(fr_norm(c).refined == doctest::Approx(1.0));
  CHECK(fr_lipschitz(c).refined == doctest::Approx(1.0));
  CHECK(fr_norm(fejer_element(2)).refined == doctest::Approx(2.0));
  CHECK(fr_lipschitz(FRElement::identity(3)).grid_max == 0.0);
  FRElement e(3);
  e.set(1, 1.0);
  CHECK(fr_lipschitz(e).refined == doctest::Approx(1.0));
  CHECK(fr_norm(e).certified() >= 1.0);
}

TEST_CASE("adjoint and positivity") {
  FRElement a(3);
  a.set(1, cplx{1.0, 2.0});
  a.set(-2, cplx{0.0, 1.0});
  const auto s = a.adjoint();
  CHECK(s.coeff(-1) == cplx{1.0, -2.0});
  CHECK(s.coeff(2) == cplx{0.0, -1.0});
  CHECK_FALSE(a.is_hermitian());
  FRElement c(2);
  c.set(1, 0.5);
  c.set(-1, 0.5);
  CHECK_FALSE(c.is_positive());
  CHECK(c.is_hermitian());
}

TEST_CASE("gamma_prime_fr") {
  CHECK(gamma_prime_fr(1) == 1.0);
  CHECK(gamma_prime_fr(5) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(gamma_prime_fr(100000) < 1e-2);
}

TEST_CASE("approximation bounds on random inputs") {
  std::mt19937_64 rng(22);
  std::normal_distribution<double> g;
  for (int n = 2; n <= 12; ++n) {
    const double gam = gamma_n(n);
    for (int trial = 0; trial < 20; ++trial) {
      const int degree = 1 + trial % 15;
      FourierPoly f(degree);
      f.set(0, g(rng));
      for (int k = 1; k <= degree; ++k) {
        const cplx c{g(rng) / k, g(rng) / k};
        f.set(k, c);
        f.set(-k, std::conj(c));
      }
      const auto kf = fr_compress(f, n);
      CHECK(circle_sup(f - fr_embed(kf)).refined <= gam * circle_lipschitz(f).certified() + 1e-8);
      CHECK(fr_norm(kf).refined <= circle_sup(f).certified() + 1e-8);
      CHECK(fr_lipschitz(kf).refined <= circle_lipschitz(f).certified() + 1e-8);

      const auto a = random_hermitian(rng, n);
      const auto back = fr_compress(fr_embed(a), n) - a;
      CHECK(fr_norm(back).refined <= gamma_prime_fr(n) * fr_lipschitz(a).certified() + 1e-8);
      CHECK(circle_lipschitz(fr_embed(a)).refined <= fr_lipschitz(a).certified() + 1e-8);
    }
  }
}

TEST_CASE("positive functions map to positive elements") {
  for (int n : {2, 4, 8}) {
    // 1 + cos x >= 0
    auto f = FourierPoly::constant(1.0) + FourierPoly::mode(1, 0.5) + FourierPoly::mode(-1, 0.5);
    CHECK(fr_compress(f, n).is_positive());
    CHECK(fr_norm(fr_compress(f, n)).refined >= std::abs(fr_compress(f, n).coeff(0)));
  }
}
