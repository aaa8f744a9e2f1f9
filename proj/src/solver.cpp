#include "spectrunc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace spectrunc {

CMatrix LipschitzProgram::constraint_matrix(const std::vector<double>& y) const {
  if (generators.empty()) return {};
  CMatrix f(generators.front().rows(), generators.front().cols());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (y[i] == 0.0) continue;
    auto dst = f.data();
    const auto src = generators[i].data();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += y[i] * src[k];
  }
  return f;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<double> logdet_hpd(const CMatrix& m) {
  const std::size_t n = m.rows();
  CMatrix l(n, n);
  double out = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) return std::nullopt;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    out += 2.0 * std::log(ljj);
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return out;
}

// tr(A B) for square A, B
double trace_product(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) s += (a(i, k) * b(k, i)).real();
  return s;
}

class Barrier {
 public:
  explicit Barrier(const LipschitzProgram& p) : p_(p), d_(p.dimension()), m_(p.num_samples()) {
    if (!p.generators.empty()) id_ = CMatrix::identity(p.generators.front().rows());
  }

  std::size_t barrier_dimension() const { return 2 * id_.rows() + 2 * m_; }

  std::optional<double> value(const std::vector<double>& y, double t) const {
    double f = -t * dot(p_.objective, y);
    if (!p_.generators.empty()) {
      const CMatrix fm = p_.constraint_matrix(y);
      const auto lm = logdet_hpd(id_ - fm);
      if (!lm) return std::nullopt;
      const auto lp = logdet_hpd(id_ + fm);
      if (!lp) return std::nullopt;
      f -= *lm + *lp;
    }
    for (std::size_t j = 0; j < m_; ++j) {
      const double r = row_dot(j, y);
      if (!(std::abs(r) < 1.0)) return std::nullopt;
      f -= std::log1p(-r) + std::log1p(r);
    }
    return f;
  }

  // Gradient and Hessian (row-major d x d) of the barrier objective at y.
  bool derivatives(const std::vector<double>& y, double t, std::vector<double>& g, std::vector<double>& h) const {
    g.assign(d_, 0.0);
    h.assign(d_ * d_, 0.0);
    for (std::size_t i = 0; i < d_; ++i) g[i] = -t * p_.objective[i];
    if (!p_.generators.empty()) {
      const CMatrix fm = p_.constraint_matrix(y);
      const auto am = inverse_hpd(id_ - fm);
      const auto ap = inverse_hpd(id_ + fm);
      if (!am || !ap) return false;
      std::vector<CMatrix> wm, wp;
      wm.reserve(d_);
      wp.reserve(d_);
      for (std::size_t i = 0; i < d_; ++i) {
        wm.push_back(*am * p_.generators[i]);
        wp.push_back(*ap * p_.generators[i]);
        g[i] += trace(wm.back()).real() - trace(wp.back()).real();
      }
      for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          const double v = trace_product(wm[i], wm[j]) + trace_product(wp[i], wp[j]);
          h[i * d_ + j] = v;
          h[j * d_ + i] = v;
        }
    }
    for (std::size_t j = 0; j < m_; ++j) {
      const double r = row_dot(j, y);
      const double u = 1.0 / (1.0 - r);
      const double v = 1.0 / (1.0 + r);
      const double* s = &p_.samples[j * d_];
      const double w = u * u + v * v;
      for (std::size_t a = 0; a < d_; ++a) {
        g[a] += s[a] * (u - v);
        for (std::size_t b = 0; b <= a; ++b) h[a * d_ + b] += w * s[a] * s[b];
      }
    }
    if (m_ > 0)
      for (std::size_t a = 0; a < d_; ++a)
        for (std::size_t b = 0; b < a; ++b) h[b * d_ + a] = h[a * d_ + b];
    return true;
  }

  // Largest s with s * dir on the boundary of the feasible set (dir != 0).
  double max_scale(const std::vector<double>& dir) const {
    double norm = 0.0;
    if (!p_.generators.empty()) norm = spectral_norm(p_.constraint_matrix(dir));
    for (std::size_t j = 0; j < m_; ++j) norm = std::max(norm, std::abs(row_dot(j, dir)));
    if (!(norm > 0.0)) throw std::invalid_argument("solve_lipschitz_program: objective direction is unconstrained");
    return 1.0 / norm;
  }

 private:
  double row_dot(std::size_t j, const std::vector<double>& y) const {
    const double* s = &p_.samples[j * d_];
    double r = 0.0;
    for (std::size_t a = 0; a < d_; ++a) r += s[a] * y[a];
    return r;
  }

  const LipschitzProgram& p_;
  std::size_t d_, m_;
  CMatrix id_;
};

ProgramSolution solve_barrier(const LipschitzProgram& prog, const SolveOptions& opts) {
  const std::size_t d = prog.dimension();
  Barrier barrier(prog);
  const double v0 = dot(prog.objective, prog.objective) * barrier.max_scale(prog.objective);
  const double mbar = static_cast<double>(barrier.barrier_dimension());
  const double gap_target = 1e-2 * opts.tol * std::max(1.0, v0);
  constexpr double kGrowth = 100.0;
  constexpr double kArmijo = 0.25;

  std::vector<double> y(d, 0.0), g, h, trial(d);
  double t = mbar / v0;
  int iterations = 0;
  while (true) {
    for (int inner = 0; inner < 200 && iterations < opts.max_iter; ++inner) {
      if (!barrier.derivatives(y, t, g, h)) break;
      std::vector<double> neg_g(d);
      for (std::size_t i = 0; i < d; ++i) neg_g[i] = -g[i];
      auto dx = solve_spd(h, neg_g);
      if (!dx) {
        double ridge = 0.0;
        for (std::size_t i = 0; i < d; ++i) ridge = std::max(ridge, h[i * d + i]);
        for (std::size_t i = 0; i < d; ++i) h[i * d + i] += 1e-12 * ridge;
        dx = solve_spd(h, neg_g);
        if (!dx) break;
      }
      ++iterations;
      const double slope = dot(g, *dx);  // -lambda^2
      if (-slope < 1e-6) break;
      const double f0 = *barrier.value(y, t);
      double s = 1.0;
      bool moved = false;
      while (s > 1e-12) {
        for (std::size_t i = 0; i < d; ++i) trial[i] = y[i] + s * (*dx)[i];
        const auto f1 = barrier.value(trial, t);
        if (f1 && *f1 <= f0 + kArmijo * s * slope) {
          moved = true;
          break;
        }
        s *= 0.5;
      }
      if (!moved) break;
      y = trial;
    }
    if (mbar / t <= gap_target) break;
    if (iterations >= opts.max_iter) throw NoConvergence("barrier solver: iteration limit reached before the duality gap closed");
    t *= kGrowth;
  }
  ProgramSolution out;
  out.value = dot(prog.objective, y);
  out.upper_bound = out.value + mbar / t;
  out.y = std::move(y);
  out.iterations = iterations;
  return out;
}

ProgramSolution solve_projected(const LipschitzProgram& prog, const SolveOptions& opts) {
  if (prog.generators.empty() || prog.num_samples() > 0)
    throw std::invalid_argument("projected gradient: needs matrix constraints only");
  const std::size_t d = prog.dimension();
  std::vector<double> gram(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      gram[i * d + j] = gram[j * d + i] = real_inner(prog.generators[i], prog.generators[j]);
  auto coords = [&](const CMatrix& m) {
    std::vector<double> b(d);
    for (std::size_t i = 0; i < d; ++i) b[i] = real_inner(prog.generators[i], m);
    auto y = solve_spd(gram, std::move(b));
    if (!y) throw std::invalid_argument("projected gradient: generators are linearly dependent");
    return *y;
  };
  const MatrixMap subspace = [&](const CMatrix& m) { return prog.constraint_matrix(coords(m)); };
  const MatrixMap ball = [](const CMatrix& m) { return project_spectral_ball(m, 1.0); };

  const auto z = solve_spd(gram, prog.objective);
  if (!z) throw std::invalid_argument("projected gradient: generators are linearly dependent");
  const CMatrix c = prog.constraint_matrix(*z);  // gradient of y -> c.y in matrix space
  const double step = std::sqrt(static_cast<double>(c.rows())) / c.frobenius_norm();
  constexpr int kWindow = 50;

  CMatrix b(c.rows(), c.cols());
  std::deque<double> history;
  int k = 1;
  for (; k <= opts.max_iter; ++k) {
    b = dykstra_project(b + c * cplx{step, 0.0}, subspace, ball, 1e-2 * opts.tol);
    const double v = real_inner(c, b);
    history.push_back(v);
    if (static_cast<int>(history.size()) > kWindow) {
      const double old = history.front();
      history.pop_front();
      if (std::abs(v - old) <= 1e-2 * opts.tol * std::max(1.0, std::abs(v))) break;
    }
  }
  if (k > opts.max_iter) throw NoConvergence("projected gradient: no stationary window within max_iter");
  auto y = coords(b);
  const double norm = spectral_norm(prog.constraint_matrix(y));
  if (norm > 1.0)
    for (auto& v : y) v /= norm;
  ProgramSolution out;
  out.value = dot(prog.objective, y);
  out.y = std::move(y);
  out.iterations = k;
  return out;
}

}  // namespace

ProgramSolution solve_lipschitz_program(const LipschitzProgram& prog, const SolveOptions& opts) {
  const std::size_t d = prog.dimension();
  if (!prog.generators.empty() && prog.generators.size() != d)
    throw std::invalid_argument("solve_lipschitz_program: one generator per coordinate");
  if (prog.samples.size() % std::max<std::size_t>(d, 1) != 0)
    throw std::invalid_argument("solve_lipschitz_program: sample rows must have the program dimension");
  if (std::all_of(prog.objective.begin(), prog.objective.end(), [](double v) { return v == 0.0; })) {
    ProgramSolution zero;
    zero.y.assign(d, 0.0);
    zero.upper_bound = 0.0;
    return zero;
  }
  return opts.method == SolverMethod::barrier ? solve_barrier(prog, opts) : solve_projected(prog, opts);
}

}  // namespace spectrunc
