#ifndef SPECTRUNC_TOOLS_ACCEPTANCE_HPP
#define SPECTRUNC_TOOLS_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spectrunc::cli {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  double gamma_prime_fault = 0.0;  // added to every gamma' the suite evaluates
  std::vector<int> only;           // empty: all criteria
  std::ostream* log = nullptr;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// "PASS [3] title: detail (1.2 s)"
std::string format_result(const CriterionResult& r);

/// max ||T - quantize(symbol(T))|| / ||[D_n, T]|| over random Hermitian T;
/// 0 for n = 1, where every T is scalar.
double max_quantization_ratio(int n, int samples, std::uint64_t seed);

}  // namespace spectrunc::cli

#endif  // SPECTRUNC_TOOLS_ACCEPTANCE_HPP
