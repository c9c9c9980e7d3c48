// Copyright 2026 The hypalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPALG_CLI_HPP
#define HYPALG_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypalg::cli {

enum class OutputFormat { Human, Machine };

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kInputError = 2 };

struct CommandConfig {
  std::string subcommand;  // verify | idempotents | solve | cr-check | taylor
  std::filesystem::path algebra_path;
  std::optional<std::filesystem::path> polynomial_path;
  std::optional<std::filesystem::path> idempotent_path;
  std::optional<std::filesystem::path> output_path;  // idempotents: write the system file
  std::optional<std::string> function_name;          // cr-check: built-in function
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::size_t max_roots = 4096;
  OutputFormat format = OutputFormat::Human;
  std::size_t points = 16;
  std::optional<double> step;            // cr-check: fixed finite-difference step
  std::optional<std::string> point;      // taylor: x
  std::optional<std::string> displacement;  // taylor: h
  std::optional<int> order;              // taylor: L (default: polynomial degree)
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output;  // the document, empty on input error
  std::string error;   // diagnostics for stderr
};

/// Runs one subcommand. All inputs are read and validated before any
/// computation; the document is produced only after everything succeeded.
CommandResult run(const CommandConfig& config);

/// argv front end: parses flags (CLI11), resolves HYPALG_SEED, runs, and
/// writes the document to `out` and diagnostics to `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypalg::cli

#endif  // HYPALG_CLI_HPP
