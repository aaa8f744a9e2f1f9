#ifndef SPECTRUNC_SOLVER_HPP
#define SPECTRUNC_SOLVER_HPP

// maximize c.y  subject to  -I <= sum_i y_i G_i <= I   (G_i Hermitian)
//                      and  |s_j . y| <= 1            (sampled constraints)
//
// This is the Connes distance program after gauge fixing: y parameterises
// Hermitian elements modulo C1 and -i[D, x(y)] = sum y_i G_i.

#include <optional>
#include <vector>

#include "spectrunc/linalg.hpp"

namespace spectrunc {

struct LipschitzProgram {
  std::vector<double> objective;
  std::vector<CMatrix> generators;
  std::vector<double> samples;  // row-major, num_samples x dimension

  std::size_t dimension() const { return objective.size(); }
  std::size_t num_samples() const { return objective.empty() ? 0 : samples.size() / objective.size(); }

  /// sum_i y_i G_i
  CMatrix constraint_matrix(const std::vector<double>& y) const;
};

enum class SolverMethod {
  barrier,             // log-barrier interior point, Newton centering
  projected_gradient,  // ascent with Dykstra projection onto the unit ball; matrix constraints only
};

struct SolveOptions {
  double tol = 1e-4;
  int max_iter = 5000;
  SolverMethod method = SolverMethod::barrier;
};

struct ProgramSolution {
  std::vector<double> y;
  double value = 0.0;
  std::optional<double> upper_bound;  // barrier only: value plus the duality gap m/t
  int iterations = 0;
};

/// Throws NoConvergence if the stopping rule is not met within max_iter.
ProgramSolution solve_lipschitz_program(const LipschitzProgram& prog, const SolveOptions& opts = {});

}  // namespace spectrunc

#endif  // SPECTRUNC_SOLVER_HPP
