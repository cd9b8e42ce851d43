#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pbwkit/verdict.hpp"

namespace pbwkit::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kFail = 1, kUndecided = 2, kInputError = 3 };

int exit_code(Status s);

/// Lowercase hex SHA-256 of the raw input bytes.
std::string sha256_hex(const std::string& bytes);

struct RunInfo {
  std::string command;
  std::string input;   // file name as given on the command line
  std::string digest;  // sha256 of the file contents
  std::string field;
  int deg_max = 0, n_max = 0, n_sat = 0;
  std::uint64_t seed = 0;
  std::size_t trial_budget = 0;
  std::optional<double> elapsed_ms;  // only with --timing; breaks byte identity
};

/// Stable JSON document; keys in fixed order, no timestamps.
std::string render_json(const VerdictReport& report, const RunInfo& info, int code);
std::string render_text(const VerdictReport& report, const RunInfo& info, int code);

}  // namespace pbwkit::cli
