#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbwkit/cli/format.hpp"
#include "pbwkit/error.hpp"
#include "pbwkit/verdict.hpp"

namespace pbwkit::cli {

/// Command-line overrides; unset fields fall back to the file's bounds, then
/// to the defaults below.
struct Overrides {
  std::optional<int> deg_max, n_max, n_sat;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trial_budget;
};

struct Options {
  int deg_max = 5, n_max = 4, n_sat = 6;
  std::uint64_t seed = 0;
  std::size_t trial_budget = 64;
  int inj_dim = 2, gor_param = 2;  // gorenstein: d and l
};

Options resolve(const Bounds& file, const Overrides& cli);

const std::vector<std::string>& command_names();

/// Runs one command. Throws pbwkit::Error for input problems and for
/// verdict-level errors (see error_exit_code).
VerdictReport run_command(const std::string& name, const Model& model, const Options& opt);

/// 1 for errors that are mathematical verdicts, 2 for exhausted budgets,
/// 3 for malformed or inconsistent input.
int error_exit_code(ErrorCode code);

/// The pbwkit executable.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pbwkit::cli
