#ifndef SPECTRUNC_TOOLS_CLI_HPP
#define SPECTRUNC_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spectrunc::cli {

enum class Format { csv, json };

struct RunConfig {
  std::string command;
  std::string family = "toeplitz";  // toeplitz | fejer-riesz | fuzzy
  int n = 3;
  std::optional<int> n_max;
  int x_steps = 64;
  double tol = 1e-4;
  int samples = 200;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out;  // empty: stdout
  Format format = Format::csv;

  // selftest only
  double gamma_prime_fault = 0.0;
  std::vector<int> only;

  int last_n() const { return n_max.value_or(n); }
};

/// Empty on success, otherwise the reason the configuration is unusable.
std::optional<std::string> validate(const RunConfig& cfg);

/// Worker count from --threads, falling back to SPECTRUNC_THREADS, then 1.
int resolve_threads(std::optional<int> flag);

using Cell = std::variant<std::string, int, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// %.10g, '.' separator, header always present, '\n' line ends.
void write_csv(const Table& t, std::ostream& os);
/// Array of row objects keyed by column name.
void write_json(const Table& t, std::ostream& os);
void write_table(const Table& t, Format f, std::ostream& os);

// Exit codes: 0 success, 1 usage or I/O error, 2 invariant violation.
// `out` receives the table, `log` the "# " progress lines.
int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_fuzzy(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& log);

/// Parses argv and dispatches; the whole program.
int run(int argc, char** argv);

}  // namespace spectrunc::cli

#endif  // SPECTRUNC_TOOLS_CLI_HPP
