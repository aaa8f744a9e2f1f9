#include "spectrunc/state.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spectrunc {

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::toeplitz: return "toeplitz";
    case SystemKind::fejer_riesz: return "fejer-riesz";
    case SystemKind::fuzzy: return "fuzzy";
  }
  return "unknown";
}

State::State(SystemKind kind, int n, std::variant<CMatrix, std::vector<cplx>> repr, StateOrigin origin)
    : kind_(kind), n_(n), repr_(std::move(repr)), origin_(std::move(origin)) {}

namespace {

void require_density(const CMatrix& rho) {
  if (!rho.is_square() || rho.rows() == 0) throw std::invalid_argument("State: density matrix must be square and nonempty");
}

CMatrix projector(const std::vector<cplx>& v) {
  CMatrix rho(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) rho(i, k) = v[i] * std::conj(v[k]);
  return rho;
}

}  // namespace

State State::symbol_pullback(double x, int n) {
  if (n < 1) throw std::invalid_argument("symbol_pullback: n must be >= 1");
  std::vector<cplx> psi(static_cast<std::size_t>(n));
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 1; k <= n; ++k) psi[static_cast<std::size_t>(k - 1)] = std::polar(s, -k * x);
  return State(SystemKind::toeplitz, n, projector(psi), CirclePoint{x});
}

State State::toeplitz_density(CMatrix rho) {
  require_density(rho);
  const int n = static_cast<int>(rho.rows());
  return State(SystemKind::toeplitz, n, std::move(rho));
}

State State::embed_pullback(double x, int n) {
  if (n < 1) throw std::invalid_argument("embed_pullback: n must be >= 1");
  std::vector<cplx> m(static_cast<std::size_t>(2 * n - 1));
  for (int k = -(n - 1); k <= n - 1; ++k) m[static_cast<std::size_t>(k + n - 1)] = std::polar(1.0, k * x);
  return State(SystemKind::fejer_riesz, n, std::move(m), CirclePoint{x});
}

State State::fejer_riesz_mixture(std::span<const double> weights, std::span<const double> points, int n) {
  if (weights.size() != points.size() || weights.empty())
    throw std::invalid_argument("fejer_riesz_mixture: need matching nonempty weights and points");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("fejer_riesz_mixture: weights must have positive sum");
  std::vector<cplx> m(static_cast<std::size_t>(2 * n - 1));
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] < 0.0) throw std::invalid_argument("fejer_riesz_mixture: negative weight");
    for (int k = -(n - 1); k <= n - 1; ++k)
      m[static_cast<std::size_t>(k + n - 1)] += (weights[j] / total) * std::polar(1.0, k * points[j]);
  }
  return State(SystemKind::fejer_riesz, n, std::move(m));
}

State State::fejer_riesz_moments(std::vector<cplx> moments) {
  if (moments.size() % 2 == 0) throw std::invalid_argument("fejer_riesz_moments: need 2n - 1 moments");
  const int n = static_cast<int>(moments.size() + 1) / 2;
  return State(SystemKind::fejer_riesz, n, std::move(moments));
}

State State::berezin_pullback(const Su2Rep& rep, const SpherePoint& p) {
  return State(SystemKind::fuzzy, rep.dim(), projector(coherent_vector(rep, p)), p);
}

State State::fuzzy_density(CMatrix rho) {
  require_density(rho);
  const int n = static_cast<int>(rho.rows());
  return State(SystemKind::fuzzy, n, std::move(rho));
}

const CMatrix& State::density() const {
  if (const auto* rho = std::get_if<CMatrix>(&repr_)) return *rho;
  throw std::logic_error("State::density: Fejér–Riesz states are moment sequences");
}

std::vector<cplx> State::moments() const {
  if (const auto* m = std::get_if<std::vector<cplx>>(&repr_)) return *m;
  if (kind_ != SystemKind::toeplitz) throw std::logic_error("State::moments: fuzzy states have no moments");
  // tr(rho T) = sum_{k,l} rho_{lk} a_{k-l}
  const auto& rho = std::get<CMatrix>(repr_);
  std::vector<cplx> m(static_cast<std::size_t>(2 * n_ - 1));
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l)
      m[static_cast<std::size_t>(k - l + n_ - 1)] += rho(static_cast<std::size_t>(l), static_cast<std::size_t>(k));
  return m;
}

cplx State::operator()(const ToeplitzElement& t) const {
  if (kind_ != SystemKind::toeplitz || t.size() != n_) throw std::invalid_argument("State: element from another system");
  const auto m = moments();
  cplx s{};
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) s += t.coeff(k) * m[static_cast<std::size_t>(k + n_ - 1)];
  return s;
}

cplx State::operator()(const FRElement& a) const {
  if (kind_ != SystemKind::fejer_riesz || a.support_bound() != n_)
    throw std::invalid_argument("State: element from another system");
  const auto& m = std::get<std::vector<cplx>>(repr_);
  cplx s{};
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) s += a.coeff(k) * m[static_cast<std::size_t>(k + n_ - 1)];
  return s;
}

cplx State::operator()(const FuzzyOperator& t) const {
  if (kind_ != SystemKind::fuzzy || t.dim() != n_) throw std::invalid_argument("State: element from another system");
  return trace(density() * t.matrix());
}

bool State::is_valid(double tol) const {
  if (const auto* rho = std::get_if<CMatrix>(&repr_)) {
    if (std::abs(trace(*rho) - 1.0) > tol || hermitian_defect(*rho) > tol) return false;
    return eig_hermitian(*rho).values.front() >= -tol;
  }
  const auto& m = std::get<std::vector<cplx>>(repr_);
  if (std::abs(m[static_cast<std::size_t>(n_ - 1)] - 1.0) > tol) return false;
  const auto un = static_cast<std::size_t>(n_);
  CMatrix g(un, un);
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l)
      g(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = m[static_cast<std::size_t>(l - k + n_ - 1)];
  if (hermitian_defect(g) > tol) return false;
  return eig_hermitian(g).values.front() >= -tol;
}

}  // namespace spectrunc
