#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "symcat/chain_params.hpp"
#include "symcat/xy_solver.hpp"

namespace symcat::io {

/// Commands exposed on the command line.
enum class Command { Fig1, Fig2, GenFun, XyCrossings, XyConcurrence, XxxConcurrence, OracleValidate };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

/// Flat parameter block shared by every command. Unset optionals fall back
/// to command-specific defaults when the config is resolved.
struct RunConfig {
  Command command = Command::Fig1;
  int n = 8;
  std::optional<int> n_min, n_max, n_step;
  std::vector<double> gammas;
  double h_min = 0.0;
  double h_max = 1.05;
  double h_step = 1e-3;
  double crossing_step = kDefaultCrossingStep;
  double tol = kDefaultCrossingTol;
  double lambda_max = 10.0;
  int lambda_points = 201;
  double lambda_star = 1.0;
  std::string state = "xy-symmetric";
  Branch branch = Branch::Plus;
  double theta = 0.5;
  int oracle_cap = 14;
  int points = 5;
  std::uint64_t seed = 20240611;
  unsigned workers = 1;
  std::string out;
};

/// Key/value pairs from a config file or from command-line flags. Keys use
/// the flag spelling without dashes ("h-step"); '_' is accepted for '-'.
using ConfigValues = std::map<std::string, std::string>;

/// Parses UTF-8 text with one `key = value` per line and `#` comments.
ConfigValues parse_config_text(std::string_view text);
ConfigValues load_config_file(const std::string& path);

/// Defaults for a command before any file or flag is applied.
RunConfig default_config(Command command);

/// Applies values in order (later maps override earlier ones), then checks
/// every field against the target command's preconditions. Throws
/// InvalidArgument on unknown keys, malformed numbers or invalid values.
RunConfig resolve_config(Command command, const std::vector<ConfigValues>& layers);

void validate(const RunConfig& config);

/// Header + rows; every cell already formatted. Doubles use 17 significant
/// digits so values round-trip exactly.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view column) const;

  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string format_number(double x);
std::string format_number(int x);

struct CommandResult {
  CsvTable table{{}};
  std::optional<CsvTable> companion;
  std::string companion_name;
  bool success = true;
};

/// Overridable pieces of the oracle suite; tests swap in a broken free-fermion
/// solver to confirm the harness notices.
struct ValidationHooks {
  std::function<ParityMinima(const ChainParams&)> free_fermion_minima = lowest_energies;
};

CommandResult cmd_fig1(const RunConfig& config);
CommandResult cmd_fig2(const RunConfig& config);
CommandResult cmd_genfun(const RunConfig& config);
CommandResult cmd_xy_crossings(const RunConfig& config);
CommandResult cmd_xy_concurrence(const RunConfig& config);
CommandResult cmd_xxx_concurrence(const RunConfig& config);
CommandResult cmd_oracle_validate(const RunConfig& config, const ValidationHooks& hooks = {});

CommandResult run_command(const RunConfig& config);

/// Writes the main table to config.out (or `os` when empty) and the
/// companion table next to it as `<stem>.<companion_name>.csv`.
void write_outputs(const CommandResult& result, const RunConfig& config, std::ostream& os);

/// Evaluates fn(0..count-1) on a pool of `workers` threads. Results are
/// stored by index, so the output never depends on scheduling. The first
/// exception by index is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn, unsigned workers) {
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1 || count < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers && w < count; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace symcat::io
